//! Monomials, monomial orders, polynomials over GF(p), classical reduction.

mod bucket;
mod monomial;
mod order;
mod polynomial;
pub mod text;

pub use bucket::Geobucket;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use polynomial::{PolyRing, Polynomial, Term};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("monomials over {0} and {1} variables cannot be compared")]
    DimensionMismatch(usize, usize),
    #[error("unknown monomial order '{0}' (expected lex, grlex or grevlex)")]
    UnknownOrder(String),
    #[error("column {col}: {msg}")]
    Parse { col: usize, msg: String },
    #[error("invalid variable list: {0}")]
    BadVars(String),
}

/// Ordered, distinct variable names; index `i` is `x_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(PolyError::BadVars("no variables".into()));
        }
        for (i, n) in names.iter().enumerate() {
            let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(PolyError::BadVars(format!("'{n}' is not a valid name")));
            }
            if names[..i].contains(n) {
                return Err(PolyError::BadVars(format!("'{n}' appears twice")));
            }
        }
        Ok(VarSet { names })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn varset_validation() {
        assert!(VarSet::new(["x", "y"]).is_ok());
        assert!(VarSet::new(Vec::<String>::new()).is_err());
        assert!(VarSet::new(["x", "x"]).is_err());
        assert!(VarSet::new(["1x"]).is_err());
        assert_eq!(VarSet::new(["a", "b0"]).unwrap().index_of("b0"), Some(1));
    }
}
