//! Polynomial text syntax: `x^2*y + 3*x - 1`. Whitespace is insignificant,
//! `*` between factors is optional, coefficients are integers reduced mod p.

use crate::field::FieldElem;

use super::{Monomial, PolyError, PolyRing, Polynomial, VarSet};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> PolyError {
        PolyError::Parse {
            col: self.pos + 1,
            msg: msg.into(),
        }
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && f(self.src[self.pos]) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }
}

fn is_ident_start(b: u8) -> bool {
    b.is_ascii_alphabetic() || b == b'_'
}

fn is_ident(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

/// Parses one polynomial over `ring` with variables named by `vars`.
pub fn parse_polynomial(src: &str, vars: &VarSet, ring: &PolyRing) -> Result<Polynomial, PolyError> {
    assert_eq!(vars.len(), ring.nvars());
    let field = ring.field();
    let mut cur = Cursor {
        src: src.as_bytes(),
        pos: 0,
    };
    let mut terms: Vec<(Monomial, FieldElem)> = Vec::new();
    let mut first = true;
    loop {
        let mut negative = false;
        match cur.peek() {
            None if first => return Err(cur.err("empty polynomial")),
            None => break,
            Some(b'+') => cur.pos += 1,
            Some(b'-') => {
                negative = true;
                cur.pos += 1;
            }
            Some(c) if !first => return Err(cur.err(format!("expected '+' or '-', found '{}'", c as char))),
            Some(_) => {}
        }
        first = false;

        let mut coeff = FieldElem::ONE;
        let mut exps = vec![0u16; vars.len()];
        let mut nfactors = 0;
        loop {
            match cur.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let digits = cur.take_while(|b| b.is_ascii_digit());
                    let mut v = FieldElem::ZERO;
                    let ten = field.elem(10);
                    for d in digits.bytes() {
                        v = field.add(field.mul(v, ten), field.elem((d - b'0') as i64));
                    }
                    if matches!(cur.src.get(cur.pos), Some(b'/') | Some(b'.')) {
                        return Err(cur.err("only integer coefficients are supported"));
                    }
                    coeff = field.mul(coeff, v);
                }
                Some(b) if is_ident_start(b) => {
                    let start = cur.pos;
                    let name = cur.take_while(is_ident);
                    let idx = vars.index_of(name).ok_or_else(|| PolyError::Parse {
                        col: start + 1,
                        msg: format!("unknown variable '{name}'"),
                    })?;
                    let mut e: u32 = 1;
                    if cur.peek() == Some(b'^') {
                        cur.pos += 1;
                        cur.skip_ws();
                        let digits = cur.take_while(|b| b.is_ascii_digit());
                        if digits.is_empty() {
                            return Err(cur.err("expected exponent after '^'"));
                        }
                        e = digits
                            .parse::<u32>()
                            .ok()
                            .filter(|&e| e <= u16::MAX as u32)
                            .ok_or_else(|| cur.err("exponent too large"))?;
                    }
                    let total = exps[idx] as u32 + e;
                    if total > u16::MAX as u32 {
                        return Err(cur.err("exponent too large"));
                    }
                    exps[idx] = total as u16;
                }
                Some(c) => {
                    return Err(cur.err(format!("unexpected '{}'", c as char)));
                }
                None => return Err(cur.err("unexpected end of input")),
            }
            nfactors += 1;
            match cur.peek() {
                Some(b'*') => {
                    cur.pos += 1;
                }
                Some(b) if b.is_ascii_digit() || is_ident_start(b) => {}
                _ => break,
            }
        }
        debug_assert!(nfactors > 0);
        if negative {
            coeff = field.neg(coeff);
        }
        terms.push((Monomial::from_exps(&exps), coeff));
    }
    Ok(ring.from_terms(terms))
}

/// Formats with coefficients as least non-negative residues, terms in the
/// ring's descending order, unit coefficients omitted.
pub fn format_polynomial(f: &Polynomial, vars: &VarSet) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = f
        .terms()
        .iter()
        .map(|t| {
            let m = t.mono.to_string_with(vars.names());
            match (t.coeff.value(), t.mono.is_one()) {
                (c, true) => c.to_string(),
                (1, false) => m,
                (c, false) => format!("{c}*{m}"),
            }
        })
        .collect();
    parts.join(" + ")
}
