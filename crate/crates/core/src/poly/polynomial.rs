use std::cmp::Ordering;

use crate::field::{FieldElem, PrimeField};

use super::{Geobucket, Monomial, MonomialOrder};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: FieldElem,
}

/// Sparse polynomial: terms strictly descending under the order of the ring
/// that built it, no zero coefficients. The empty list is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    /// Terms must already be strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(terms: Vec<Term>) -> Self {
        Polynomial { terms }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Leading monomial. Panics on the zero polynomial.
    #[inline]
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].mono
    }

    /// Leading coefficient. Panics on the zero polynomial.
    #[inline]
    pub fn lc(&self) -> FieldElem {
        self.terms[0].coeff
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.deg()).max().unwrap_or(0)
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }
}

/// `GF(p)[x_1..x_n]` under a fixed monomial order. Every polynomial operation
/// goes through a ring, which keeps term lists canonical for its order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    nvars: usize,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: PrimeField, nvars: usize, order: MonomialOrder) -> Self {
        assert!(nvars >= 1, "a polynomial ring needs at least one variable");
        PolyRing { field, nvars, order }
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        PolyRing { order, ..*self }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn one_mono(&self) -> Monomial {
        Monomial::one(self.nvars)
    }

    pub fn constant(&self, c: FieldElem) -> Polynomial {
        self.term(c, self.one_mono())
    }

    pub fn one(&self) -> Polynomial {
        self.constant(FieldElem::ONE)
    }

    pub fn term(&self, c: FieldElem, m: Monomial) -> Polynomial {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![Term { mono: m, coeff: c }],
            }
        }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.term(FieldElem::ONE, Monomial::var(self.nvars, i))
    }

    /// Builds a canonical polynomial from arbitrary terms: sorts under this
    /// ring's order, merges equal monomials, drops zeros. Also used to move a
    /// polynomial from one order to another.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, FieldElem)>>(&self, terms: I) -> Polynomial {
        let mut raw: Vec<Term> = terms
            .into_iter()
            .map(|(mono, coeff)| {
                debug_assert_eq!(mono.nvars(), self.nvars);
                Term { mono, coeff }
            })
            .collect();
        raw.sort_by(|a, b| self.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = self.field.add(last.coeff, t.coeff),
                _ => out.push(t),
            }
            if out.last().is_some_and(|l| l.coeff.is_zero()) {
                out.pop();
            }
        }
        Polynomial { terms: out }
    }

    /// Re-sorts a polynomial built by another ring into this ring's order.
    pub fn reorder(&self, f: &Polynomial) -> Polynomial {
        self.from_terms(f.terms.iter().map(|t| (t.mono.clone(), t.coeff)))
    }

    pub fn is_canonical(&self, f: &Polynomial) -> bool {
        f.terms
            .iter()
            .all(|t| !t.coeff.is_zero() && t.mono.nvars() == self.nvars)
            && f.terms
                .windows(2)
                .all(|w| self.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.merge(f, FieldElem::ONE, &self.one_mono(), g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.merge(f, self.field.neg(FieldElem::ONE), &self.one_mono(), g)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.scale(f, self.field.neg(FieldElem::ONE))
    }

    pub fn scale(&self, f: &Polynomial, c: FieldElem) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.clone(),
                    coeff: self.field.mul(t.coeff, c),
                })
                .collect(),
        }
    }

    /// `c * m * f`.
    pub fn mul_term(&self, f: &Polynomial, c: FieldElem, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.mul(m),
                    coeff: self.field.mul(t.coeff, c),
                })
                .collect(),
        }
    }

    /// `f - c * m * g`, the elementary reduction step.
    pub fn sub_mul_term(&self, f: &Polynomial, c: FieldElem, m: &Monomial, g: &Polynomial) -> Polynomial {
        self.merge(f, self.field.neg(c), m, g)
    }

    /// `f + c * m * g` by a single merge pass.
    fn merge(&self, f: &Polynomial, c: FieldElem, m: &Monomial, g: &Polynomial) -> Polynomial {
        if c.is_zero() || g.is_zero() {
            return f.clone();
        }
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut fi = f.terms.iter().peekable();
        let mut gi = g
            .terms
            .iter()
            .map(|t| Term {
                mono: t.mono.mul(m),
                coeff: self.field.mul(t.coeff, c),
            })
            .peekable();
        loop {
            let ord = match (fi.peek(), gi.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(a), Some(b)) => self.cmp(&a.mono, &b.mono),
            };
            match ord {
                Ordering::Greater => out.push(fi.next().unwrap().clone()),
                Ordering::Less => out.push(gi.next().unwrap()),
                Ordering::Equal => {
                    let a = fi.next().unwrap();
                    let b = gi.next().unwrap();
                    let s = self.field.add(a.coeff, b.coeff);
                    if !s.is_zero() {
                        out.push(Term { mono: b.mono, coeff: s });
                    }
                }
            }
        }
        Polynomial { terms: out }
    }

    /// Full product. Only recovery of syzygy vectors and test oracles need it.
    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for t in &g.terms {
            acc = self.merge(&acc, t.coeff, &t.mono, f);
        }
        acc
    }

    /// Leading monomial and coefficient; `None` for the zero polynomial.
    pub fn leading<'a>(&self, f: &'a Polynomial) -> Option<(&'a Monomial, FieldElem)> {
        f.terms.first().map(|t| (&t.mono, t.coeff))
    }

    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.terms.first() {
            None => Polynomial::zero(),
            Some(t) if t.coeff == FieldElem::ONE => f.clone(),
            Some(t) => self.scale(f, self.field.inv(t.coeff).expect("nonzero leading coefficient")),
        }
    }

    /// Full reduction: no monomial of the result is divisible by any leading
    /// monomial of `basis`. The first divisor in list order is used.
    pub fn normal_form(&self, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
        let mut bucket = Geobucket::new(self, f.clone());
        let mut terms = Vec::new();
        while let Some(lead) = bucket.pop_leading(self) {
            match basis.iter().find(|g| !g.is_zero() && g.lm().divides(&lead.mono)) {
                Some(g) => {
                    let t = lead.mono.div(g.lm()).unwrap();
                    let c = self.field.div(lead.coeff, g.lc()).unwrap();
                    bucket.add_mul_term(self, self.field.neg(c), &t, &g.terms[1..]);
                }
                None => terms.push(lead),
            }
        }
        Polynomial { terms }
    }

    /// `f` with its leading term kept and the rest replaced by its normal form.
    pub fn reduce_tail(&self, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
        let Some((lead, rest)) = f.terms.split_first() else {
            return Polynomial::zero();
        };
        let tail = self.normal_form(&Polynomial { terms: rest.to_vec() }, basis);
        let mut terms = Vec::with_capacity(tail.terms.len() + 1);
        terms.push(lead.clone());
        terms.extend(tail.terms);
        Polynomial { terms }
    }

    /// `lcm/lt(f) * f - lcm/lt(g) * g`.
    pub fn s_polynomial(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let l = f.lm().lcm(g.lm());
        let tf = l.div(f.lm()).unwrap();
        let tg = l.div(g.lm()).unwrap();
        let a = self.mul_term(f, self.field.inv(f.lc()).unwrap(), &tf);
        self.sub_mul_term(&a, self.field.inv(g.lc()).unwrap(), &tg, g)
    }

    /// Minimal, fully autoreduced, monic basis of the same ideal, sorted by
    /// leading monomial descending. For a Gröbner basis this is the reduced
    /// Gröbner basis.
    pub fn interreduce(&self, basis: &[Polynomial]) -> Vec<Polynomial> {
        // Pending elements sorted by leading monomial descending; the smallest
        // is taken first and reduced against everything accepted so far.
        let mut pending: Vec<Polynomial> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
        self.sort_basis(&mut pending);
        let mut accepted: Vec<Polynomial> = Vec::new();
        while let Some(f) = pending.pop() {
            let r = self.normal_form(&f, &accepted);
            if r.is_zero() {
                continue;
            }
            let r = self.monic(&r);
            let mut requeue = false;
            accepted.retain(|g| {
                let hit = r.lm().divides(g.lm());
                if hit {
                    pending.push(g.clone());
                    requeue = true;
                }
                !hit
            });
            if requeue {
                self.sort_basis(&mut pending);
            }
            accepted.push(r);
        }
        let tails: Vec<Polynomial> = (0..accepted.len())
            .map(|i| {
                let others: Vec<Polynomial> = accepted
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, g)| g.clone())
                    .collect();
                self.reduce_tail(&accepted[i], &others)
            })
            .collect();
        let mut out = tails;
        self.sort_basis(&mut out);
        out
    }

    /// Leading monomial descending, ties broken lexicographically on exponents.
    pub fn sort_basis(&self, basis: &mut [Polynomial]) {
        basis.sort_by(|a, b| match (a.terms.first(), b.terms.first()) {
            (Some(x), Some(y)) => self
                .cmp(&y.mono, &x.mono)
                .then_with(|| y.mono.exps().cmp(x.mono.exps())),
            (None, Some(_)) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (None, None) => Ordering::Equal,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(order: MonomialOrder, p: u64) -> PolyRing {
        PolyRing::new(PrimeField::new(p).unwrap(), 2, order)
    }

    /// Terms as (coeff, [ex, ey]).
    fn poly(r: &PolyRing, terms: &[(i64, [u16; 2])]) -> Polynomial {
        r.from_terms(terms.iter().map(|(c, e)| (Monomial::from_exps(e), r.field().elem(*c))))
    }

    #[test]
    fn arithmetic() {
        let r = ring(MonomialOrder::Lex, 7);
        let f = poly(&r, &[(1, [1, 0]), (1, [0, 0])]);
        assert!(r.add(&f, &r.neg(&f)).is_zero());
        assert_eq!(r.scale(&f, r.field().elem(3)), poly(&r, &[(3, [1, 0]), (3, [0, 0])]));
        let g = poly(&r, &[(1, [2, 0]), (-1, [0, 1])]);
        assert_eq!(
            r.mul_term(&g, FieldElem::ONE, &Monomial::from_exps(&[0, 1])),
            poly(&r, &[(1, [2, 1]), (-1, [0, 2])])
        );
        // (x+1)(x-1) = x^2 - 1
        let h = poly(&r, &[(1, [1, 0]), (-1, [0, 0])]);
        assert_eq!(r.mul(&f, &h), poly(&r, &[(1, [2, 0]), (-1, [0, 0])]));
    }

    #[test]
    fn from_terms_merges_and_cancels() {
        let r = ring(MonomialOrder::Lex, 7);
        let f = poly(&r, &[(3, [1, 0]), (2, [1, 0]), (2, [1, 0]), (1, [0, 0])]);
        assert_eq!(f, poly(&r, &[(1, [0, 0])]));
        assert!(r.is_canonical(&f));
    }

    #[test]
    fn leading_terms() {
        let lex = ring(MonomialOrder::Lex, 7);
        let f = poly(&lex, &[(1, [1, 0]), (-1, [0, 2])]);
        assert_eq!(lex.leading(&f), Some((&Monomial::from_exps(&[1, 0]), FieldElem::ONE)));
        let grevlex = lex.with_order(MonomialOrder::Grevlex);
        let f = grevlex.reorder(&f);
        assert_eq!(
            grevlex.leading(&f),
            Some((&Monomial::from_exps(&[0, 2]), grevlex.field().elem(6)))
        );
        let five = poly(&lex, &[(5, [0, 0])]);
        assert_eq!(lex.leading(&five), Some((&Monomial::one(2), lex.field().elem(5))));
        assert_eq!(lex.leading(&Polynomial::zero()), None);
    }

    #[test]
    fn normal_forms() {
        let r = ring(MonomialOrder::Lex, 7);
        let f = poly(&r, &[(1, [2, 0]), (-1, [0, 1])]);
        assert_eq!(r.normal_form(&f, &[]), f);
        // x^2 - y mod x - y^2 -> y^4 - y
        let g = poly(&r, &[(1, [1, 0]), (-1, [0, 2])]);
        let y4 = poly(&r, &[(1, [0, 4]), (-1, [0, 1])]);
        assert_eq!(r.normal_form(&f, std::slice::from_ref(&g)), y4);
        let h = poly(&r, &[(1, [0, 3]), (-1, [0, 0])]);
        assert!(r.normal_form(&y4, &[h]).is_zero());
    }

    #[test]
    fn s_polynomials() {
        let r = ring(MonomialOrder::Lex, 7);
        let f1 = poly(&r, &[(1, [2, 0]), (-1, [0, 1])]);
        let f2 = poly(&r, &[(1, [1, 1]), (-1, [0, 0])]);
        assert!(r.s_polynomial(&f1, &f1).is_zero());
        // y*f1 - x*f2 = x - y^2
        assert_eq!(r.s_polynomial(&f1, &f2), poly(&r, &[(1, [1, 0]), (-1, [0, 2])]));
        let g1 = poly(&r, &[(1, [1, 0]), (-1, [0, 2])]);
        let g2 = poly(&r, &[(1, [0, 3]), (-1, [0, 0])]);
        let s = r.s_polynomial(&g1, &g2);
        assert!(r.normal_form(&s, &[g1, g2]).is_zero());
    }

    #[test]
    fn interreduction() {
        let r = ring(MonomialOrder::Lex, 7);
        let a = poly(&r, &[(1, [1, 0]), (-1, [0, 2])]);
        let b = poly(&r, &[(1, [0, 4]), (-1, [0, 1])]);
        let c = poly(&r, &[(1, [0, 3]), (-1, [0, 0])]);
        let red = r.interreduce(&[a.clone(), b, c.clone()]);
        assert_eq!(red, vec![a.clone(), c.clone()]);
        assert_eq!(r.interreduce(&red), red);

        let f = poly(&r, &[(3, [1, 1]), (1, [0, 0])]);
        assert_eq!(r.interreduce(std::slice::from_ref(&f)), vec![r.monic(&f)]);

        let x = poly(&r, &[(1, [1, 0])]);
        let x2 = poly(&r, &[(2, [1, 0])]);
        assert_eq!(r.interreduce(&[x.clone(), x2]), vec![x]);
    }
}
