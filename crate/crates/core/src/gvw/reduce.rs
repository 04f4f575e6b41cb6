use std::cmp::Ordering;

use crate::field::FieldElem;
use crate::poly::{Geobucket, Monomial, PolyRing, Polynomial, Term};
use crate::sig::{JPair, LabeledPoly, ModuleMonomial, ModuleOrder, ReductionStep};

/// Syzygy criterion: some known syzygy leading monomial divides `sig`.
pub fn syzygy_reject(sig: &ModuleMonomial, syzygy_lms: &[ModuleMonomial]) -> bool {
    syzygy_lms.iter().any(|w| w.divides(sig))
}

/// Cover criterion: a basis element whose signature divides the pair's
/// signature, shifted up to it, has a strictly smaller leading monomial than
/// the pair's product.
pub fn cover_reject(jp: &JPair, basis: &[LabeledPoly], ring: &PolyRing) -> bool {
    basis.iter().any(|g| {
        g.sig.divides(&jp.sig) && {
            let q = jp.sig.mono.div(&g.sig.mono).unwrap();
            ring.cmp(&q.mul(g.poly.lm()), &jp.prod_lm) == Ordering::Less
        }
    })
}

/// `h` is top-reducible by some element only at exactly its own signature.
/// Such an `h` adds nothing the basis does not already represent.
pub fn super_reducible(sig: &ModuleMonomial, h: &Polynomial, basis: &[LabeledPoly]) -> bool {
    basis.iter().any(|g| match h.lm().div(g.poly.lm()) {
        Some(t) => g.sig.index == sig.index && g.sig.mono.mul(&t) == sig.mono,
        None => false,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// Monic, or zero.
    pub poly: Polynomial,
    pub steps: Vec<ReductionStep>,
    /// The factor applied to make the result monic (1 for zero results).
    pub scale: FieldElem,
}

/// Regular top-reduction of `f`, carrying signature `sig`, by `basis`.
///
/// A reducer `g` is admissible for a term `m` when `lm(g) | m` and the shifted
/// signature `(m/lm(g)) * sig(g)` is strictly below `sig`. Among admissible
/// reducers the smallest `lm(g)` wins, then the smallest id.
pub fn regular_reduce(
    ring: &PolyRing,
    mord: &ModuleOrder,
    sig: &ModuleMonomial,
    f: Polynomial,
    basis: &[LabeledPoly],
) -> Reduction {
    let reducers: Vec<&LabeledPoly> = basis.iter().collect();
    regular_reduce_among(ring, mord, sig, f, &reducers, false)
}

/// [`regular_reduce`] by the given reducers. With `tail`, the terms below the
/// leading one are regularly reduced as well.
pub(super) fn regular_reduce_among(
    ring: &PolyRing,
    mord: &ModuleOrder,
    sig: &ModuleMonomial,
    f: Polynomial,
    reducers: &[&LabeledPoly],
    tail: bool,
) -> Reduction {
    let field = ring.field();
    let reducer = |term: &Term| {
        let mut best: Option<(&LabeledPoly, Monomial)> = None;
        for &g in reducers {
            let Some(t) = term.mono.div(g.poly.lm()) else {
                continue;
            };
            if mord.cmp(&g.sig.mul(&t), sig) != Ordering::Less {
                continue;
            }
            let better = match &best {
                None => true,
                Some((b, _)) => match ring.cmp(g.poly.lm(), b.poly.lm()) {
                    Ordering::Less => true,
                    Ordering::Equal => g.id < b.id,
                    Ordering::Greater => false,
                },
            };
            if better {
                best = Some((g, t));
            }
        }
        best
    };
    let mut bucket = Geobucket::new(ring, f);
    let mut steps = Vec::new();
    let mut kept: Vec<Term> = Vec::new();
    while let Some(term) = bucket.pop_leading(ring) {
        match reducer(&term) {
            Some((g, t)) => {
                let c = field.div(term.coeff, g.poly.lc()).unwrap();
                bucket.add_mul_term(ring, field.neg(c), &t, &g.poly.terms()[1..]);
                steps.push(ReductionStep {
                    coeff: c,
                    mono: t,
                    reducer: g.id,
                });
            }
            None => {
                kept.push(term);
                if !tail {
                    break;
                }
            }
        }
    }
    let scale = match kept.first() {
        Some(lt) => field.inv(lt.coeff).unwrap(),
        None => FieldElem::ONE,
    };
    let f = if tail {
        Polynomial::from_sorted_terms(kept)
    } else {
        bucket.finish(ring, kept.pop())
    };
    Reduction {
        poly: ring.scale(&f, scale),
        steps,
        scale,
    }
}
