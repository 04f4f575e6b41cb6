//! Rebuilding module vectors from provenance traces after a run.

use thiserror::Error;

use crate::field::FieldElem;
use crate::sig::{ModuleMonomial, ModuleVector, Origin, ProvenanceTrace};

use super::{pair_vector, GvwError, GvwState, SyzygySource};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VectorRef {
    Basis(usize),
    Syzygy(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("{0:?}: image of the recovered vector differs from the stored polynomial")]
    Image(VectorRef),
    #[error("{which:?}: leading module monomial {found:?} differs from signature {expected:?}")]
    Signature {
        which: VectorRef,
        expected: ModuleMonomial,
        found: Option<ModuleMonomial>,
    },
    #[error("{0:?}: online vector disagrees with the recovered one")]
    OnlineMismatch(VectorRef),
}

impl GvwState {
    fn expand(&self, trace: &ProvenanceTrace, known: &[ModuleVector]) -> ModuleVector {
        let ring = &self.ring;
        let m = self.generators.len();
        let mut v = match &trace.origin {
            Origin::Generator(i) => ModuleVector::unit(ring, m, *i, FieldElem::ONE),
            Origin::JPair { t, parent } => known[*parent].mul_term(ring, FieldElem::ONE, t),
        };
        for s in &trace.steps {
            v = v.sub_mul_term(ring, s.coeff, &s.mono, &known[s.reducer]);
        }
        v.scale(ring, trace.scale)
    }

    /// Vectors `v` with `phi(v) = g.poly` for every basis element, in id order.
    pub fn recover_basis_vectors(&self) -> Vec<ModuleVector> {
        let mut out: Vec<ModuleVector> = Vec::with_capacity(self.basis.len());
        for g in &self.basis {
            let v = self.expand(&g.trace, &out);
            out.push(v);
        }
        out
    }

    /// Expands the trace of a basis element or syzygy into a full vector.
    pub fn recover_vector(&self, which: VectorRef) -> Result<ModuleVector, GvwError> {
        match which {
            VectorRef::Basis(id) => {
                if id >= self.basis.len() {
                    return Err(GvwError::MissingTrace(which));
                }
                let mut known = Vec::with_capacity(id + 1);
                for g in &self.basis[..=id] {
                    let v = self.expand(&g.trace, &known);
                    known.push(v);
                }
                Ok(known.pop().unwrap())
            }
            VectorRef::Syzygy(k) => {
                let rec = self.syzygies.get(k).ok_or(GvwError::MissingTrace(which))?;
                Ok(self.syzygy_vector(&rec.source, None))
            }
        }
    }

    fn syzygy_vector(&self, source: &SyzygySource, known: Option<&[ModuleVector]>) -> ModuleVector {
        let ring = &self.ring;
        match source {
            SyzygySource::Principal { i, j } => {
                let mut v = ModuleVector::zero(self.generators.len());
                v.0[*i] = self.generators[*j].clone();
                v.0[*j] = ring.neg(&self.generators[*i]);
                v
            }
            SyzygySource::ZeroReduction(trace) => match known {
                Some(known) => self.expand(trace, known),
                None => self.expand(trace, &self.recover_basis_vectors()),
            },
            SyzygySource::Pair { a, b } => {
                let pair = |known: &[ModuleVector]| {
                    pair_vector(ring, &known[*a], &self.basis[*a].poly, &known[*b], &self.basis[*b].poly)
                };
                match known {
                    Some(known) => pair(known),
                    None => pair(&self.recover_basis_vectors()),
                }
            }
        }
    }

    /// All syzygy vectors of `H`, in insertion order.
    pub fn recover_syzygy_vectors(&self) -> Vec<ModuleVector> {
        let known = self.recover_basis_vectors();
        self.syzygies
            .iter()
            .map(|rec| self.syzygy_vector(&rec.source, Some(&known)))
            .collect()
    }

    /// Checks every recovered vector: images match the stored polynomials (or
    /// vanish for syzygies), leading module monomials match the signatures, and
    /// online vectors, when tracked, agree with recovery.
    pub fn audit(&self) -> Result<(), AuditError> {
        let basis_vecs = self.recover_basis_vectors();
        for (g, v) in self.basis.iter().zip(&basis_vecs) {
            let which = VectorRef::Basis(g.id);
            if v.image(&self.ring, &self.generators) != g.poly {
                return Err(AuditError::Image(which));
            }
            let lead = v.leading(&self.mord);
            if lead.as_ref() != Some(&g.sig) {
                return Err(AuditError::Signature {
                    which,
                    expected: g.sig.clone(),
                    found: lead,
                });
            }
            if g.vector.as_ref().is_some_and(|online| online != v) {
                return Err(AuditError::OnlineMismatch(which));
            }
        }
        for (k, rec) in self.syzygies.iter().enumerate() {
            let which = VectorRef::Syzygy(k);
            let v = self.syzygy_vector(&rec.source, Some(&basis_vecs));
            if !v.image(&self.ring, &self.generators).is_zero() {
                return Err(AuditError::Image(which));
            }
            let lead = v.leading(&self.mord);
            if lead.as_ref() != Some(&rec.lm) {
                return Err(AuditError::Signature {
                    which,
                    expected: rec.lm.clone(),
                    found: lead,
                });
            }
            if rec.vector.as_ref().is_some_and(|online| online != &v) {
                return Err(AuditError::OnlineMismatch(which));
            }
        }
        Ok(())
    }
}
