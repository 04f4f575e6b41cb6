use crate::field::{FieldElem, PrimeField};
use crate::poly::{Monomial, PolyRing, Polynomial};

/// Sparse coordinate vector: strictly increasing positions, nonzero entries.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseVec(Vec<(usize, FieldElem)>);

impl SparseVec {
    pub fn zero() -> Self {
        SparseVec(Vec::new())
    }

    pub fn from_entries<I: IntoIterator<Item = (usize, FieldElem)>>(field: &PrimeField, entries: I) -> Self {
        let mut raw: Vec<(usize, FieldElem)> = entries.into_iter().collect();
        raw.sort_by_key(|e| e.0);
        let mut out: Vec<(usize, FieldElem)> = Vec::with_capacity(raw.len());
        for (i, c) in raw {
            match out.last_mut() {
                Some(last) if last.0 == i => last.1 = field.add(last.1, c),
                _ => out.push((i, c)),
            }
            if out.last().is_some_and(|l| l.1.is_zero()) {
                out.pop();
            }
        }
        SparseVec(out)
    }

    pub fn entries(&self) -> &[(usize, FieldElem)] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, pos: usize) -> FieldElem {
        match self.0.binary_search_by_key(&pos, |e| e.0) {
            Ok(k) => self.0[k].1,
            Err(_) => FieldElem::ZERO,
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, field: &PrimeField, c: FieldElem, other: &SparseVec) -> SparseVec {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let take_left = j == other.0.len() || (i < self.0.len() && self.0[i].0 < other.0[j].0);
            let take_right = i == self.0.len() || (j < other.0.len() && other.0[j].0 < self.0[i].0);
            if take_left {
                out.push(self.0[i]);
                i += 1;
            } else if take_right {
                let v = field.mul(c, other.0[j].1);
                if !v.is_zero() {
                    out.push((other.0[j].0, v));
                }
                j += 1;
            } else {
                let v = field.add(self.0[i].1, field.mul(c, other.0[j].1));
                if !v.is_zero() {
                    out.push((self.0[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec(out)
    }

    pub fn scale(&self, field: &PrimeField, c: FieldElem) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero();
        }
        SparseVec(self.0.iter().map(|&(i, v)| (i, field.mul(v, c))).collect())
    }
}

#[derive(Debug, Clone)]
pub struct EchelonRow {
    pub pivot: usize,
    /// Entry at `pivot` is 1; every other row is zero at this position.
    pub vec: SparseVec,
    /// The enumerated monomial that created this row.
    pub lead: Monomial,
    /// A polynomial mapping to `vec`.
    pub preimage: Polynomial,
}

/// Fully reduced echelon basis of the images seen so far, with preimages.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    rows: Vec<EchelonRow>,
}

pub enum Reduced {
    /// The image was dependent; `kernel` maps to zero, led by the input monomial.
    Dependent { kernel: Polynomial },
    /// A new row was inserted.
    Independent,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rows(&self) -> &[EchelonRow] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces the image `v` of monomial `m` and either reports the kernel
    /// element `m - (combination of preimages)` or inserts a new row.
    pub fn reduce_insert(&mut self, ring: &PolyRing, m: &Monomial, v: SparseVec) -> Reduced {
        let field = ring.field();
        let mut v = v;
        let mut pre = ring.term(FieldElem::ONE, m.clone());
        for row in &self.rows {
            let c = v.get(row.pivot);
            if c.is_zero() {
                continue;
            }
            let neg = field.neg(c);
            v = v.axpy(field, neg, &row.vec);
            pre = ring.sub_mul_term(&pre, c, &ring.one_mono(), &row.preimage);
        }
        let Some(&(pivot, pc)) = v.entries().first() else {
            return Reduced::Dependent { kernel: pre };
        };
        let inv = field.inv(pc).unwrap();
        let v = v.scale(field, inv);
        let pre = ring.scale(&pre, inv);
        for row in &mut self.rows {
            let c = row.vec.get(pivot);
            if !c.is_zero() {
                row.vec = row.vec.axpy(field, field.neg(c), &v);
                row.preimage = ring.sub_mul_term(&row.preimage, c, &ring.one_mono(), &pre);
            }
        }
        self.rows.push(EchelonRow {
            pivot,
            vec: v,
            lead: m.clone(),
            preimage: pre,
        });
        Reduced::Independent
    }
}
