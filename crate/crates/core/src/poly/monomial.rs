use std::fmt;

use smallvec::SmallVec;

/// Dense exponent vector with a cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            deg: 0,
        }
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Monomial {
            deg: exps.iter().map(|&e| e as u32).sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    #[inline]
    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn deg(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Panics on exponent overflow (any exponent reaching 2^16).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
            .collect();
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    /// `self | other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
            deg: self.deg - other.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 8]> = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        Monomial {
            deg: exps.iter().map(|&e| e as u32).sum(),
            exps,
        }
    }

    /// No variable occurs in both.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (name, &e) in names.iter().zip(self.exps.iter()) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn basic_ops() {
        // x^2 y, x y^3
        assert_eq!(m(&[2, 1]).lcm(&m(&[1, 3])), m(&[2, 3]));
        assert!(m(&[1, 1]).divides(&m(&[2, 1])));
        assert_eq!(m(&[2, 1]).div(&m(&[1, 1])), Some(m(&[1, 0])));
        assert!(!m(&[2, 0]).divides(&m(&[1, 1])));
        assert_eq!(m(&[1, 1]).div(&m(&[2, 0])), None);
        assert_eq!(m(&[2, 1]).mul(&m(&[0, 3])).deg(), 6);
        assert!(m(&[2, 0]).is_coprime(&m(&[0, 5])));
        assert!(!m(&[2, 1]).is_coprime(&m(&[0, 5])));
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn exponent_overflow_panics() {
        m(&[u16::MAX]).mul(&m(&[1]));
    }

    #[test]
    fn display() {
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(m(&[2, 1]).to_string_with(&names), "x^2*y");
        assert_eq!(m(&[0, 0]).to_string_with(&names), "1");
    }
}
