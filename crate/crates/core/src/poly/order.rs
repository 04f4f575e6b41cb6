use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{Monomial, PolyError};

/// Monomial orders. In all of them `x_1 > x_2 > ... > x_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grlex,
    Grevlex,
}

impl MonomialOrder {
    pub const ALL: [MonomialOrder; 3] = [MonomialOrder::Lex, MonomialOrder::Grlex, MonomialOrder::Grevlex];

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        let (ea, eb) = (a.exps(), b.exps());
        match self {
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::Grlex => a.deg().cmp(&b.deg()).then_with(|| ea.cmp(eb)),
            MonomialOrder::Grevlex => a.deg().cmp(&b.deg()).then_with(|| {
                for (x, y) in ea.iter().zip(eb).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn checked_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        if a.nvars() != b.nvars() {
            return Err(PolyError::DimensionMismatch(a.nvars(), b.nvars()));
        }
        Ok(self.cmp(a, b))
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Grlex => "grlex",
            MonomialOrder::Grevlex => "grevlex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" | "deglex" => Ok(MonomialOrder::Grlex),
            "grevlex" | "degrevlex" => Ok(MonomialOrder::Grevlex),
            _ => Err(PolyError::UnknownOrder(s.to_string())),
        }
    }
}
