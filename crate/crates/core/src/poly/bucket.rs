use std::cmp::Ordering;

use crate::field::FieldElem;

use super::{Monomial, PolyRing, Polynomial, Term};

const RATIO: usize = 4;

/// A polynomial kept as a short list of sorted buckets of geometrically
/// growing size. An update `f - c * m * g` costs amortized `O(|g| log |f|)`.
///
/// Each bucket is stored in ascending order, largest term last.
#[derive(Debug, Default)]
pub struct Geobucket {
    buckets: Vec<Vec<Term>>,
}

fn capacity(level: usize) -> usize {
    RATIO.pow(level as u32 + 1)
}

impl Geobucket {
    pub fn new(ring: &PolyRing, f: Polynomial) -> Self {
        let mut b = Geobucket::default();
        let mut terms = f.into_terms();
        terms.reverse();
        b.insert(ring, terms);
        b
    }

    /// Adds `c * m * g`.
    pub fn add_mul_term(&mut self, ring: &PolyRing, c: FieldElem, m: &Monomial, g: &[Term]) {
        if c.is_zero() || g.is_empty() {
            return;
        }
        let field = ring.field();
        let terms = g
            .iter()
            .rev()
            .map(|t| Term {
                mono: t.mono.mul(m),
                coeff: field.mul(t.coeff, c),
            })
            .collect();
        self.insert(ring, terms);
    }

    fn insert(&mut self, ring: &PolyRing, terms: Vec<Term>) {
        let mut level = 0;
        while capacity(level) < terms.len() {
            level += 1;
        }
        let mut carry = terms;
        loop {
            if self.buckets.len() <= level {
                self.buckets.resize_with(level + 1, Vec::new);
            }
            let existing = std::mem::take(&mut self.buckets[level]);
            carry = merge_ascending(ring, existing, carry);
            if carry.len() <= capacity(level) {
                self.buckets[level] = carry;
                return;
            }
            level += 1;
        }
    }

    /// Removes and returns the leading term, or `None` for zero.
    pub fn pop_leading(&mut self, ring: &PolyRing) -> Option<Term> {
        let field = ring.field();
        loop {
            let mut best: Option<usize> = None;
            for (k, b) in self.buckets.iter().enumerate() {
                let Some(t) = b.last() else { continue };
                match best {
                    Some(j) if ring.cmp(&t.mono, &self.buckets[j].last().unwrap().mono) != Ordering::Greater => {}
                    _ => best = Some(k),
                }
            }
            let j = best?;
            let mut lead = self.buckets[j].pop().unwrap();
            for k in 0..self.buckets.len() {
                if k == j {
                    continue;
                }
                if self.buckets[k].last().is_some_and(|t| t.mono == lead.mono) {
                    let t = self.buckets[k].pop().unwrap();
                    lead.coeff = field.add(lead.coeff, t.coeff);
                }
            }
            if !lead.coeff.is_zero() {
                return Some(lead);
            }
        }
    }

    /// Collapses the buckets into a polynomial with `lead` prepended. `lead`
    /// must be larger than every remaining term.
    pub fn finish(self, ring: &PolyRing, lead: Option<Term>) -> Polynomial {
        let mut all = Vec::new();
        for b in self.buckets {
            all = merge_ascending(ring, all, b);
        }
        all.extend(lead);
        all.reverse();
        Polynomial::from_sorted_terms(all)
    }
}

fn merge_ascending(ring: &PolyRing, a: Vec<Term>, b: Vec<Term>) -> Vec<Term> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let field = ring.field();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ai = a.into_iter().peekable();
    let mut bi = b.into_iter().peekable();
    loop {
        let ord = match (ai.peek(), bi.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (Some(x), Some(y)) => ring.cmp(&x.mono, &y.mono),
        };
        match ord {
            Ordering::Less => out.push(ai.next().unwrap()),
            Ordering::Greater => out.push(bi.next().unwrap()),
            Ordering::Equal => {
                let mut x = ai.next().unwrap();
                let y = bi.next().unwrap();
                x.coeff = field.add(x.coeff, y.coeff);
                if !x.coeff.is_zero() {
                    out.push(x);
                }
            }
        }
    }
    out
}
