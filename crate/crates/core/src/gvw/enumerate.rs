//! Degree-truncated linear-algebra view of signature computations: walk
//! module monomials `t * e_j` upward in the module order and test whether the
//! image `t * f_j` is linearly dependent on the images seen before it.
//!
//! Independent of the GVW driver; used as a cross-check of its syzygy set.

use std::collections::HashMap;

use crate::field::FieldElem;
use crate::poly::{Monomial, PolyRing, Polynomial};
use crate::sig::{ModuleMonomial, ModuleOrder, ModuleOrderKind};

use super::minimalize;

fn monomials_up_to(nvars: usize, deg: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::from_exps(cur));
            return;
        }
        for e in 0..=left {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, deg, &mut vec![0; nvars], &mut out);
    out
}

/// Minimal leading module monomials of kernel elements found among all
/// `t * e_j` with `deg(t) <= deg_bound`. Multiples of a found monomial are
/// skipped. Cost grows combinatorially with the bound.
pub fn signature_enumerate(
    ring: &PolyRing,
    generators: &[Polynomial],
    kind: ModuleOrderKind,
    deg_bound: u32,
) -> Vec<ModuleMonomial> {
    let mord = ModuleOrder::new(kind, ring.order(), generators);
    let monos = monomials_up_to(ring.nvars(), deg_bound);
    let mut candidates: Vec<ModuleMonomial> = (0..generators.len())
        .flat_map(|index| monos.iter().map(move |m| ModuleMonomial { index, mono: m.clone() }))
        .collect();
    candidates.sort_by(|a, b| mord.cmp(a, b));

    // Echelon rows keyed by their leading monomial, each monic.
    let mut rows: HashMap<Monomial, Polynomial> = HashMap::new();
    let mut found: Vec<ModuleMonomial> = Vec::new();
    for cand in candidates {
        if found.iter().any(|w| w.divides(&cand)) {
            continue;
        }
        let f = &generators[cand.index];
        let mut rest = ring.mul_term(f, FieldElem::ONE, &cand.mono);
        let mut residue: Vec<(Monomial, FieldElem)> = Vec::new();
        while let Some(lead) = rest.leading_term() {
            match rows.get(&lead.mono) {
                Some(row) => {
                    let c = lead.coeff;
                    rest = ring.sub_mul_term(&rest, c, &ring.one_mono(), row);
                }
                None => {
                    residue.push((lead.mono.clone(), lead.coeff));
                    let t = ring.term(lead.coeff, lead.mono.clone());
                    rest = ring.sub(&rest, &t);
                }
            }
        }
        if residue.is_empty() {
            found.push(cand);
        } else {
            let v = ring.monic(&ring.from_terms(residue));
            rows.insert(v.lm().clone(), v);
        }
    }
    minimalize(&found)
}
