//! Arithmetic in the prime field GF(p), `p < 2^31`.
//!
//! Elements are plain residues. Every operation goes through the
//! [`PrimeField`] that owns them; values do not carry the modulus.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("modulus {0} is out of range (need 2 <= p < 2^31)")]
    OutOfRange(u64),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),
}

/// A residue `0 <= value < p`. Only meaningful together with its field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !(2..(1 << 31)).contains(&p) {
            return Err(FieldError::OutOfRange(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary signed integer into the field.
    pub fn elem(&self, v: i64) -> FieldElem {
        FieldElem(v.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let s = a.0 as u64 + b.0 as u64;
        let p = self.p as u64;
        FieldElem(if s >= p { s - p } else { s } as u32)
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 >= b.0 {
            FieldElem(a.0 - b.0)
        } else {
            FieldElem(a.0 + (self.p - b.0))
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if a.0 == 0 {
            a
        } else {
            FieldElem(self.p - a.0)
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: FieldElem) -> Result<FieldElem, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero(self.p));
        }
        let (mut r0, mut r1) = (self.p as i64, a.0 as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.elem(s0))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn arith(&self, a: FieldElem, b: FieldElem, op: ArithOp) -> FieldElem {
        match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Neg => self.neg(a),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn small_arith() {
        let f = gf7();
        assert_eq!(f.arith(f.elem(3), f.elem(5), ArithOp::Add), f.elem(1));
        assert_eq!(f.arith(f.elem(0), f.elem(0), ArithOp::Neg), f.elem(0));
        assert_eq!(f.arith(f.elem(3), f.elem(5), ArithOp::Mul), f.elem(1));
        assert_eq!(f.sub(f.elem(2), f.elem(5)), f.elem(4));
        assert_eq!(f.elem(-1), f.elem(6));
    }

    #[test]
    fn inverses() {
        let f = gf7();
        assert_eq!(f.inv(f.elem(1)).unwrap(), f.elem(1));
        assert_eq!(f.inv(f.elem(2)).unwrap(), f.elem(4));
        assert_eq!(f.inv(f.elem(3)).unwrap(), f.elem(5));
        assert_eq!(f.inv(f.elem(0)), Err(FieldError::DivisionByZero(7)));
    }

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(PrimeField::new(1), Err(FieldError::OutOfRange(1)));
        assert_eq!(PrimeField::new(1 << 31), Err(FieldError::OutOfRange(1 << 31)));
        assert_eq!(PrimeField::new(32001), Err(FieldError::NotPrime(32001)));
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(2147483647).is_ok());
    }

    proptest! {
        #[test]
        fn inverse_law(a in 1u32..32003) {
            let f = PrimeField::new(32003).unwrap();
            let a = f.elem(a as i64);
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElem::ONE);
        }

        #[test]
        fn inverse_law_large_prime(a in 1u32..2147483647) {
            let f = PrimeField::new(2147483647).unwrap();
            let a = f.elem(a as i64);
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElem::ONE);
        }

        #[test]
        fn ring_axioms(a in 0i64..32003, b in 0i64..32003, c in 0i64..32003) {
            let f = PrimeField::new(32003).unwrap();
            let (a, b, c) = (f.elem(a), f.elem(b), f.elem(c));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.add(a, b), f.add(b, a));
            prop_assert_eq!(f.mul(a, b), f.mul(b, a));
            prop_assert_eq!(f.add(a, f.neg(a)), FieldElem::ZERO);
            prop_assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
        }
    }
}
