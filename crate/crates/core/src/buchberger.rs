//! Classical Buchberger algorithm, the reference oracle for the signature
//! and kernel algorithms.
//!
//! Pairs are selected by the normal strategy (smallest lcm under the ring
//! order). Pair updates follow Gebauer–Möller:
//! the chain criterion prunes old pairs and new pairs among themselves, the
//! product criterion drops pairs with coprime leading monomials, and basis
//! elements whose leading monomial becomes redundant leave the reducer set.

use std::cmp::Ordering;

use crate::poly::{Monomial, PolyRing, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuchbergerConfig {
    /// Apply the product and chain criteria. Off gives the naive algorithm,
    /// which reduces every S-polynomial of every pair.
    pub criteria: bool,
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        BuchbergerConfig { criteria: true }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_created: usize,
    pub pairs_considered: usize,
    pub product_criterion: usize,
    pub chain_criterion: usize,
    pub zero_reductions: usize,
}

impl BuchbergerStats {
    pub fn to_block(&self) -> String {
        format!(
            "pairs_created={}\npairs_considered={}\nproduct_criterion={}\nchain_criterion={}\nzero_reductions={}\n",
            self.pairs_created,
            self.pairs_considered,
            self.product_criterion,
            self.chain_criterion,
            self.zero_reductions
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
}

impl CriticalPair {
    fn new(i: usize, j: usize, basis: &[Polynomial]) -> Self {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let lcm = basis[i].lm().lcm(basis[j].lm());
        CriticalPair { i, j, lcm }
    }

    pub fn deg(&self) -> u32 {
        self.lcm.deg()
    }
}

struct State<'r> {
    ring: &'r PolyRing,
    /// Every polynomial ever added; pairs index into this.
    all: Vec<Polynomial>,
    /// Indices into `all` still used as reducers.
    active: Vec<usize>,
    reducers: Vec<Polynomial>,
    pairs: Vec<CriticalPair>,
    stats: BuchbergerStats,
    criteria: bool,
}

impl State<'_> {
    fn insert(&mut self, h: Polynomial) {
        let h = self.ring.monic(&h);
        let hi = self.all.len();
        self.all.push(h);
        if self.criteria {
            self.update(hi);
        } else {
            for k in 0..hi {
                self.pairs.push(CriticalPair::new(k, hi, &self.all));
                self.stats.pairs_created += 1;
            }
            self.active.push(hi);
        }
        self.reduce_tails(hi);
        self.reducers = self.active.iter().map(|&k| self.all[k].clone()).collect();
    }

    /// Reduces the tails of the other reducers that `hi` can act on.
    fn reduce_tails(&mut self, hi: usize) {
        let lm_h = self.all[hi].lm().clone();
        for a in 0..self.active.len() {
            let k = self.active[a];
            if k == hi || !self.all[k].terms()[1..].iter().any(|t| lm_h.divides(&t.mono)) {
                continue;
            }
            let others: Vec<Polynomial> = self
                .active
                .iter()
                .filter(|&&o| o != k)
                .map(|&o| self.all[o].clone())
                .collect();
            self.all[k] = self.ring.reduce_tail(&self.all[k], &others);
        }
    }

    /// Gebauer–Möller update for the new element `hi`.
    fn update(&mut self, hi: usize) {
        let lm_h = self.all[hi].lm().clone();
        let cand: Vec<CriticalPair> = self
            .active
            .iter()
            .map(|&g| CriticalPair::new(g, hi, &self.all))
            .collect();
        self.stats.pairs_created += cand.len();
        let partner = |p: &CriticalPair| if p.i == hi { p.j } else { p.i };

        // Among the new pairs keep those whose lcm is not a proper multiple of
        // another new lcm. Coprime pairs stay in this step, may shadow their
        // multiples, and are dropped by the product criterion afterwards.
        let mut kept: Vec<CriticalPair> = Vec::new();
        for (a, p) in cand.iter().enumerate() {
            let coprime = lm_h.is_coprime(self.all[partner(p)].lm());
            let shadowed = !coprime
                && cand
                    .iter()
                    .enumerate()
                    .any(|(b, q)| b != a && q.lcm.divides(&p.lcm) && (q.lcm != p.lcm || b < a));
            if shadowed {
                self.stats.chain_criterion += 1;
            } else {
                kept.push(p.clone());
            }
        }
        let before = kept.len();
        kept.retain(|p| !lm_h.is_coprime(self.all[partner(p)].lm()));
        self.stats.product_criterion += before - kept.len();

        // Chain criterion on old pairs.
        let all = &self.all;
        let before = self.pairs.len();
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm) && all[p.i].lm().lcm(&lm_h) != p.lcm && all[p.j].lm().lcm(&lm_h) != p.lcm)
        });
        self.stats.chain_criterion += before - self.pairs.len();
        self.pairs.extend(kept);

        self.active.retain(|&g| !lm_h.divides(all[g].lm()));
        self.active.push(hi);
    }

    fn pop_pair(&mut self) -> Option<CriticalPair> {
        let ring = self.ring;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| pair_priority(ring, a, b))?
            .0;
        Some(self.pairs.swap_remove(best))
    }
}

fn pair_priority(ring: &PolyRing, a: &CriticalPair, b: &CriticalPair) -> Ordering {
    ring.cmp(&a.lcm, &b.lcm).then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
}

/// A Gröbner basis of the ideal generated by `generators` (zeros ignored).
/// The result is monic but not interreduced.
pub fn buchberger(ring: &PolyRing, generators: &[Polynomial]) -> Vec<Polynomial> {
    buchberger_with(ring, generators, BuchbergerConfig::default()).0
}

pub fn buchberger_with(
    ring: &PolyRing,
    generators: &[Polynomial],
    config: BuchbergerConfig,
) -> (Vec<Polynomial>, BuchbergerStats) {
    let mut st = State {
        ring,
        all: Vec::new(),
        active: Vec::new(),
        reducers: Vec::new(),
        pairs: Vec::new(),
        stats: BuchbergerStats::default(),
        criteria: config.criteria,
    };
    for f in generators.iter().filter(|f| !f.is_zero()) {
        st.insert(f.clone());
    }
    while let Some(pair) = st.pop_pair() {
        st.stats.pairs_considered += 1;
        let s = ring.s_polynomial(&st.all[pair.i], &st.all[pair.j]);
        let h = ring.normal_form(&s, &st.reducers);
        if h.is_zero() {
            st.stats.zero_reductions += 1;
        } else {
            st.insert(h);
        }
    }
    let basis = st.active.iter().map(|&k| st.all[k].clone()).collect();
    (basis, st.stats)
}

/// A pair whose S-polynomial does not reduce to zero, with that remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerWitness {
    pub i: usize,
    pub j: usize,
    pub remainder: Polynomial,
}

/// Reduces the S-polynomial of every pair except those settled by the product
/// criterion (coprime leading monomials) or the chain criterion (some third
/// leading monomial divides the lcm, and its lcms with both ends are proper
/// divisors of it). Skipped pairs inherit a representation from pairs with
/// strictly smaller lcm, so the check stays exact.
pub fn groebner_witness(ring: &PolyRing, basis: &[Polynomial]) -> Option<GroebnerWitness> {
    let basis: Vec<Polynomial> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    let chain = |i: usize, j: usize, lcm: &Monomial| {
        basis.iter().enumerate().any(|(k, g)| {
            k != i
                && k != j
                && g.lm().divides(lcm)
                && &g.lm().lcm(basis[i].lm()) != lcm
                && &g.lm().lcm(basis[j].lm()) != lcm
        })
    };
    for j in 0..basis.len() {
        for i in 0..j {
            if basis[i].lm().is_coprime(basis[j].lm()) || chain(i, j, &basis[i].lm().lcm(basis[j].lm())) {
                continue;
            }
            let s = ring.s_polynomial(&basis[i], &basis[j]);
            let r = ring.normal_form(&s, &basis);
            if !r.is_zero() {
                return Some(GroebnerWitness { i, j, remainder: r });
            }
        }
    }
    None
}

pub fn is_groebner(ring: &PolyRing, basis: &[Polynomial]) -> bool {
    groebner_witness(ring, basis).is_none()
}
