//! Line-oriented problem files:
//!
//! ```text
//! # comment
//! field 32003
//! vars x,y,z
//! order grevlex
//! poly x^2 - y
//! poly x*y - 1
//! ```

use thiserror::Error;

use crate::field::{FieldError, PrimeField};
use crate::poly::text::{format_polynomial, parse_polynomial};
use crate::poly::{MonomialOrder, PolyError, PolyRing, Polynomial, VarSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: {source}")]
    Field { line: usize, source: FieldError },
    #[error("missing '{0}' line")]
    Missing(&'static str),
    #[error("no nonzero generators")]
    NoGenerators,
}

#[derive(Debug, Clone)]
pub struct Problem {
    pub field: PrimeField,
    pub vars: VarSet,
    pub order: MonomialOrder,
    /// Generators in file order, zeros included.
    pub generators: Vec<Polynomial>,
}

impl Problem {
    pub fn ring(&self) -> PolyRing {
        PolyRing::new(self.field, self.vars.len(), self.order)
    }

    /// Same problem under another polynomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Problem {
        let ring = self.ring().with_order(order);
        Problem {
            order,
            generators: self.generators.iter().map(|g| ring.reorder(g)).collect(),
            ..self.clone()
        }
    }

    /// Nonzero generators with their original (0-based) positions.
    pub fn nonzero_generators(&self) -> (Vec<Polynomial>, Vec<usize>) {
        self.generators
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(i, g)| (g.clone(), i))
            .unzip()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "field {}\nvars {}\norder {}\n",
            self.field.modulus(),
            self.vars.names().join(","),
            self.order
        );
        for g in &self.generators {
            out.push_str(&format!("poly {}\n", format_polynomial(g, &self.vars)));
        }
        out
    }
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> ProblemError {
    ProblemError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

/// Parses a problem file. `field`, `vars` and `order` must precede the first
/// `poly` line.
pub fn parse_problem(src: &str) -> Result<Problem, ProblemError> {
    let mut field = None;
    let mut vars = None;
    let mut order = None;
    let mut generators = Vec::new();
    for (k, raw) in src.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap();
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (key, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        let rest_col = indent + key.len() + 2;
        let value = rest.trim();
        match key {
            "field" => {
                let p: u64 = value
                    .parse()
                    .map_err(|_| syntax(line, rest_col, format!("expected a prime, found '{value}'")))?;
                field = Some(PrimeField::new(p).map_err(|source| ProblemError::Field { line, source })?);
            }
            "vars" => {
                let names = value.split(',').map(|s| s.trim().to_string());
                vars = Some(VarSet::new(names).map_err(|e| syntax(line, rest_col, e.to_string()))?);
            }
            "order" => {
                order = Some(
                    value
                        .parse::<MonomialOrder>()
                        .map_err(|e| syntax(line, rest_col, e.to_string()))?,
                );
            }
            "poly" => {
                let (Some(f), Some(v), Some(o)) = (field, vars.as_ref(), order) else {
                    return Err(syntax(line, 1, "'field', 'vars' and 'order' must come before 'poly'"));
                };
                let ring = PolyRing::new(f, v.len(), o);
                let p = parse_polynomial(rest, v, &ring).map_err(|e| match e {
                    PolyError::Parse { col, msg } => syntax(line, rest_col + col - 1, msg),
                    other => syntax(line, rest_col, other.to_string()),
                })?;
                generators.push(p);
            }
            _ => return Err(syntax(line, indent + 1, format!("unknown directive '{key}'"))),
        }
    }
    let problem = Problem {
        field: field.ok_or(ProblemError::Missing("field"))?,
        vars: vars.ok_or(ProblemError::Missing("vars"))?,
        order: order.ok_or(ProblemError::Missing("order"))?,
        generators,
    };
    if problem.generators.iter().all(Polynomial::is_zero) {
        return Err(ProblemError::NoGenerators);
    }
    Ok(problem)
}

/// One polynomial per line; blank lines and `#` comments ignored.
pub fn parse_basis(src: &str, vars: &VarSet, ring: &PolyRing) -> Result<Vec<Polynomial>, ProblemError> {
    let mut out = Vec::new();
    for (k, raw) in src.lines().enumerate() {
        let content = raw.split('#').next().unwrap();
        if content.trim().is_empty() {
            continue;
        }
        out.push(parse_polynomial(content, vars, ring).map_err(|e| match e {
            PolyError::Parse { col, msg } => syntax(k + 1, col, msg),
            other => syntax(k + 1, 1, other.to_string()),
        })?);
    }
    Ok(out)
}
