//! Gröbner bases of kernels of linear maps `k[X] -> V`, `dim V < inf`, by
//! enumerating monomials in increasing order and testing linear dependency of
//! their images; FGLM order change is the special case where the map sends a
//! monomial to its normal form modulo a zero-dimensional Gröbner basis.

mod echelon;

pub use echelon::{EchelonBasis, EchelonRow, Reduced, SparseVec};

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::field::FieldElem;
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MmmError {
    #[error("ideal is not zero-dimensional: no leading monomial is a pure power of variable {0}")]
    NotZeroDimensional(usize),
}

/// A `k`-linear map from `k[X]` into a finite-dimensional space, given on
/// monomials. `eval` must be deterministic.
pub trait LinearMap {
    fn dim(&self) -> usize;
    fn eval(&self, m: &Monomial) -> SparseVec;

    /// Extension to polynomials by linearity.
    fn eval_poly(&self, ring: &PolyRing, f: &Polynomial) -> SparseVec {
        let field = ring.field();
        f.terms().iter().fold(SparseVec::zero(), |acc, t| {
            acc.axpy(field, t.coeff, &self.eval(&t.mono))
        })
    }
}

/// Monomials outside the leading-monomial ideal of the Gröbner basis `basis`,
/// ascending under the ring order.
pub fn quotient_basis(ring: &PolyRing, basis: &[Polynomial]) -> Result<Vec<Monomial>, MmmError> {
    let lms: Vec<&Monomial> = basis.iter().filter(|g| !g.is_zero()).map(|g| g.lm()).collect();
    if lms.iter().any(|m| m.is_one()) {
        return Ok(Vec::new());
    }
    for v in 0..ring.nvars() {
        let pure = lms
            .iter()
            .any(|m| m.exps().iter().enumerate().all(|(i, &e)| (i == v) == (e > 0)));
        if !pure {
            return Err(MmmError::NotZeroDimensional(v));
        }
    }
    let standard = |m: &Monomial| !lms.iter().any(|l| l.divides(m));
    let mut seen: BTreeSet<Vec<u16>> = BTreeSet::new();
    let mut stack = vec![ring.one_mono()];
    let mut out = Vec::new();
    seen.insert(ring.one_mono().exps().to_vec());
    while let Some(m) = stack.pop() {
        for v in 0..ring.nvars() {
            let c = m.mul(&Monomial::var(ring.nvars(), v));
            if standard(&c) && seen.insert(c.exps().to_vec()) {
                stack.push(c);
            }
        }
        out.push(m);
    }
    out.sort_by(|a, b| ring.cmp(a, b));
    Ok(out)
}

/// `m -> coordinates of normal_form(m)` on the quotient basis.
#[derive(Debug, Clone)]
pub struct NormalFormMap {
    ring: PolyRing,
    basis: Vec<Polynomial>,
    quotient: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl NormalFormMap {
    /// `basis` must be a Gröbner basis under `ring`'s order.
    pub fn new(ring: &PolyRing, basis: &[Polynomial]) -> Result<Self, MmmError> {
        let quotient = quotient_basis(ring, basis)?;
        let index = quotient.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Ok(NormalFormMap {
            ring: *ring,
            basis: basis.iter().filter(|g| !g.is_zero()).cloned().collect(),
            quotient,
            index,
        })
    }

    pub fn quotient(&self) -> &[Monomial] {
        &self.quotient
    }
}

impl LinearMap for NormalFormMap {
    fn dim(&self) -> usize {
        self.quotient.len()
    }

    fn eval(&self, m: &Monomial) -> SparseVec {
        let nf = self
            .ring
            .normal_form(&self.ring.term(FieldElem::ONE, m.clone()), &self.basis);
        SparseVec::from_entries(
            self.ring.field(),
            nf.terms().iter().map(|t| (self.index[&t.mono], t.coeff)),
        )
    }
}

pub fn nf_map_from_gb(ring: &PolyRing, basis: &[Polynomial]) -> Result<NormalFormMap, MmmError> {
    NormalFormMap::new(ring, basis)
}

/// Candidate monomial keyed for ascending pops under a fixed order.
#[derive(Clone, PartialEq, Eq)]
struct Candidate {
    mono: Monomial,
    order: MonomialOrder,
}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&self.mono, &other.mono)
    }
}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone)]
pub struct KernelBasis {
    /// Reduced Gröbner basis of the kernel, leading monomial descending.
    pub basis: Vec<Polynomial>,
    /// Minimal generators of the kernel's leading-monomial ideal.
    pub staircase: Vec<Monomial>,
    pub echelon: EchelonBasis,
    /// Number of `eval` calls.
    pub evaluations: usize,
}

/// Reduced Gröbner basis of `ker L` under `ring`'s order.
///
/// Candidates come off a frontier in increasing order. A candidate divisible
/// by a known kernel leading monomial is skipped; otherwise its image is
/// reduced against the echelon basis. A dependent image yields a kernel
/// element; an independent one enlarges the basis and enqueues `x_k * m` for
/// every variable. At most `dim` monomials are independent, so this stops.
pub fn mmm_kernel_gb<L: LinearMap + ?Sized>(ring: &PolyRing, map: &L) -> KernelBasis {
    let mut frontier: BTreeSet<Candidate> = BTreeSet::new();
    frontier.insert(Candidate {
        mono: ring.one_mono(),
        order: ring.order(),
    });
    let mut echelon = EchelonBasis::new();
    let mut staircase: Vec<Monomial> = Vec::new();
    let mut kernel: Vec<Polynomial> = Vec::new();
    let mut evaluations = 0;
    while let Some(Candidate { mono, .. }) = frontier.pop_first() {
        if staircase.iter().any(|s| s.divides(&mono)) {
            continue;
        }
        evaluations += 1;
        match echelon.reduce_insert(ring, &mono, map.eval(&mono)) {
            Reduced::Dependent { kernel: p } => {
                staircase.push(mono);
                kernel.push(p);
            }
            Reduced::Independent => {
                for v in 0..ring.nvars() {
                    frontier.insert(Candidate {
                        mono: mono.mul(&Monomial::var(ring.nvars(), v)),
                        order: ring.order(),
                    });
                }
            }
        }
    }
    ring.sort_basis(&mut kernel);
    KernelBasis {
        basis: kernel,
        staircase,
        echelon,
        evaluations,
    }
}

/// Converts a Gröbner basis of a zero-dimensional ideal from `src`'s order to
/// `dst`; the result is the reduced basis under `dst`.
pub fn fglm(src: &PolyRing, basis: &[Polynomial], dst: MonomialOrder) -> Result<Vec<Polynomial>, MmmError> {
    let map = nf_map_from_gb(src, basis)?;
    Ok(mmm_kernel_gb(&src.with_order(dst), &map).basis)
}

#[cfg(test)]
mod tests;
