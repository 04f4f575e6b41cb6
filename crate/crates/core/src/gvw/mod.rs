//! The GVW signature-based Gröbner basis algorithm.
//!
//! The driver keeps a strong Gröbner basis `G` of labeled polynomials, a set
//! `H` of syzygy leading monomials, and a queue of JPairs. `H` starts with the
//! principal syzygies of the input and, unless disabled, grows by the pair
//! syzygies `g' * u - g * u'` of every new basis element. Each step pops one
//! JPair, applies the syzygy and cover criteria, regularly reduces the
//! product `t * parent` (never the bare image of a module monomial), and then
//! either records a new syzygy or extends `G`.
//!
//! Only signatures are needed during the run. Full module vectors are rebuilt
//! afterwards from provenance traces (see [`GvwState::recover_vector`]); with
//! `track_vectors` they are additionally maintained online for auditing.

mod enumerate;
mod queue;
mod recover;
mod reduce;

pub use enumerate::signature_enumerate;
pub use recover::{AuditError, VectorRef};
use reduce::regular_reduce_among;
pub use reduce::{cover_reject, regular_reduce, super_reducible, syzygy_reject, Reduction};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use queue::PairQueue;

use crate::field::FieldElem;
use crate::poly::{PolyRing, Polynomial};
use crate::sig::{
    make_jpair, JPair, LabeledPoly, ModuleMonomial, ModuleOrder, ModuleOrderKind, ModuleVector, Origin, ProvenanceTrace,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GvwError {
    #[error("no generators")]
    EmptyInput,
    #[error("generator {0} is zero; strip zero generators first")]
    ZeroGenerator(usize),
    #[error("step limit of {0} reductions exceeded")]
    StepLimit(usize),
    #[error("no trace recorded for {0:?}")]
    MissingTrace(VectorRef),
}

/// Order in which queued JPairs are processed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SelectionStrategy {
    /// Smallest signature, then smallest product leading monomial, then parent id.
    MinSig,
    /// Smallest sugar degree, `deg(t) + deg(f_i)` for a signature `t * e_i`,
    /// then as `MinSig`.
    MinDegree,
    /// Creation order.
    Fifo,
}

impl SelectionStrategy {
    pub const ALL: [SelectionStrategy; 3] = [
        SelectionStrategy::MinSig,
        SelectionStrategy::MinDegree,
        SelectionStrategy::Fifo,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SelectionStrategy::MinSig => "min-sig",
            SelectionStrategy::MinDegree => "min-degree",
            SelectionStrategy::Fifo => "fifo",
        }
    }
}

impl fmt::Display for SelectionStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SelectionStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min-sig" | "min_sig" => Ok(SelectionStrategy::MinSig),
            "min-degree" | "min_degree" => Ok(SelectionStrategy::MinDegree),
            "fifo" => Ok(SelectionStrategy::Fifo),
            _ => Err(format!("unknown strategy '{s}' (expected min-sig, min-degree or fifo)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GvwConfig {
    pub strategy: SelectionStrategy,
    /// Maintain full module vectors online (audit mode).
    pub track_vectors: bool,
    /// Abort after this many reductions.
    pub step_limit: usize,
    /// Keep only one queued JPair per signature.
    pub dedup: bool,
    /// Besides the principal syzygies of the input, record the leading
    /// monomial of `g' * u - g * u'` for every pair of basis elements
    /// `(u, g)`, `(u', g')` whose two candidate leading terms do not cancel.
    pub pair_syzygies: bool,
    /// Re-reduce older basis elements that a new element regularly top-reduces.
    pub rereduce: bool,
    /// Regularly reduce the terms below the leading one as well.
    pub tail_reduce: bool,
}

impl Default for GvwConfig {
    fn default() -> Self {
        GvwConfig {
            strategy: SelectionStrategy::MinSig,
            track_vectors: false,
            step_limit: 1_000_000,
            dedup: true,
            pair_syzygies: true,
            rereduce: true,
            tail_reduce: false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GvwStats {
    pub jpairs_created: usize,
    /// Syzygy-criterion rejections when a JPair is created.
    pub sig_rejected_at_creation: usize,
    /// Syzygy-criterion rejections when a JPair is popped.
    pub sig_rejected_at_pop: usize,
    pub jpairs_cover_rejected: usize,
    /// Reduced results dropped because they are top-reducible at their own signature.
    pub jpairs_super_rejected: usize,
    pub jpairs_dedup_rejected: usize,
    /// Queued pairs dropped because an endpoint was superseded by re-reduction.
    pub jpairs_stale_dropped: usize,
    pub reductions: usize,
    pub zero_reductions: usize,
    /// Older basis elements reduced again after a newer element appeared.
    pub rereductions: usize,
}

impl GvwStats {
    pub fn jpairs_sig_rejected(&self) -> usize {
        self.sig_rejected_at_creation + self.sig_rejected_at_pop
    }

    /// Flat `key=value` block, one entry per line.
    pub fn to_block(&self) -> String {
        let rows = [
            ("jpairs_created", self.jpairs_created),
            ("jpairs_sig_rejected", self.jpairs_sig_rejected()),
            ("jpairs_sig_rejected_at_creation", self.sig_rejected_at_creation),
            ("jpairs_sig_rejected_at_pop", self.sig_rejected_at_pop),
            ("jpairs_cover_rejected", self.jpairs_cover_rejected),
            ("jpairs_super_rejected", self.jpairs_super_rejected),
            ("jpairs_dedup_rejected", self.jpairs_dedup_rejected),
            ("jpairs_stale_dropped", self.jpairs_stale_dropped),
            ("reductions", self.reductions),
            ("zero_reductions", self.zero_reductions),
            ("rereductions", self.rereductions),
        ];
        rows.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    Syzygy,
    Cover,
    Super,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GvwEvent {
    SyzygyFound,
    BasisExtended,
    Rejected(RejectReason),
    QueueEmpty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SyzygySource {
    /// `f_j e_i - f_i e_j`.
    Principal { i: usize, j: usize },
    /// A JPair whose regular reduction reached zero.
    ZeroReduction(ProvenanceTrace),
    /// `g_b * v_a - g_a * v_b` for basis elements `a < b`.
    Pair { a: usize, b: usize },
}

#[derive(Debug, Clone)]
pub struct SyzygyRecord {
    pub lm: ModuleMonomial,
    pub source: SyzygySource,
    pub vector: Option<ModuleVector>,
}

#[derive(Debug, Clone)]
pub struct GvwState {
    ring: PolyRing,
    mord: ModuleOrder,
    generators: Vec<Polynomial>,
    config: GvwConfig,
    basis: Vec<LabeledPoly>,
    syzygies: Vec<SyzygyRecord>,
    syzygy_lms: Vec<ModuleMonomial>,
    queue: PairQueue,
    popped: Vec<ModuleMonomial>,
    superseded: Vec<bool>,
    /// Ids of the elements not superseded, ascending.
    live: Vec<usize>,
    stats: GvwStats,
}

impl GvwState {
    /// Seeds `G` with the monic generators, `H` with the principal syzygy
    /// leading monomials, and the queue with every surviving JPair of `G`.
    pub fn new(
        ring: PolyRing,
        generators: &[Polynomial],
        mord: ModuleOrderKind,
        config: GvwConfig,
    ) -> Result<Self, GvwError> {
        if generators.is_empty() {
            return Err(GvwError::EmptyInput);
        }
        if let Some(i) = generators.iter().position(Polynomial::is_zero) {
            return Err(GvwError::ZeroGenerator(i));
        }
        let m = generators.len();
        let mord = ModuleOrder::new(mord, ring.order(), generators);
        let degrees = generators.iter().map(Polynomial::total_degree).collect();
        let queue = PairQueue::new(ring, mord.clone(), config.strategy, degrees);
        let mut st = GvwState {
            ring,
            mord,
            generators: generators.to_vec(),
            config,
            basis: Vec::new(),
            syzygies: Vec::new(),
            syzygy_lms: Vec::new(),
            queue,
            popped: Vec::new(),
            superseded: vec![false; m],
            live: (0..m).collect(),
            stats: GvwStats::default(),
        };

        for j in 0..m {
            for i in 0..j {
                let a = ModuleMonomial {
                    index: i,
                    mono: generators[j].lm().clone(),
                };
                let b = ModuleMonomial {
                    index: j,
                    mono: generators[i].lm().clone(),
                };
                let lm = st.mord.max(&a, &b).clone();
                if st.syzygy_lms.contains(&lm) {
                    continue;
                }
                let vector = config.track_vectors.then(|| {
                    let mut v = ModuleVector::zero(m);
                    v.0[i] = generators[j].clone();
                    v.0[j] = ring.neg(&generators[i]);
                    v
                });
                st.push_syzygy(SyzygyRecord {
                    lm,
                    source: SyzygySource::Principal { i, j },
                    vector,
                });
            }
        }

        for (i, f) in generators.iter().enumerate() {
            let scale = ring.field().inv(f.lc()).unwrap();
            st.basis.push(LabeledPoly {
                id: i,
                sig: ModuleMonomial::unit(i, ring.nvars()),
                poly: ring.scale(f, scale),
                trace: ProvenanceTrace {
                    origin: Origin::Generator(i),
                    steps: Vec::new(),
                    scale,
                },
                vector: config.track_vectors.then(|| ModuleVector::unit(&ring, m, i, scale)),
            });
        }
        for j in 0..m {
            for i in 0..j {
                st.offer_pair(i, j);
            }
        }
        Ok(st)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn module_order(&self) -> &ModuleOrder {
        &self.mord
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn config(&self) -> &GvwConfig {
        &self.config
    }

    /// The strong Gröbner basis built so far.
    pub fn basis(&self) -> &[LabeledPoly] {
        &self.basis
    }

    /// Polynomials of the basis elements that have not been superseded.
    pub fn basis_polys(&self) -> Vec<Polynomial> {
        self.basis
            .iter()
            .filter(|g| !self.superseded[g.id])
            .map(|g| g.poly.clone())
            .collect()
    }

    /// Whether element `id` was replaced by a re-reduced copy.
    pub fn is_superseded(&self, id: usize) -> bool {
        self.superseded[id]
    }

    pub fn syzygies(&self) -> &[SyzygyRecord] {
        &self.syzygies
    }

    pub fn syzygy_lms(&self) -> &[ModuleMonomial] {
        &self.syzygy_lms
    }

    /// Syzygy leading monomials not divisible by another one.
    pub fn minimal_syzygy_lms(&self) -> Vec<ModuleMonomial> {
        minimalize(&self.syzygy_lms)
    }

    pub fn stats(&self) -> &GvwStats {
        &self.stats
    }

    pub fn queue_len(&self) -> usize {
        self.queue.len()
    }

    /// Signatures of popped JPairs, in pop order.
    pub fn popped_signatures(&self) -> &[ModuleMonomial] {
        &self.popped
    }

    fn push_syzygy(&mut self, rec: SyzygyRecord) {
        self.syzygy_lms.push(rec.lm.clone());
        self.syzygies.push(rec);
    }

    fn offer_pair(&mut self, a: usize, b: usize) {
        let Some(jp) = make_jpair(&self.basis[a], &self.basis[b], &self.mord) else {
            return;
        };
        self.stats.jpairs_created += 1;
        if syzygy_reject(&jp.sig, &self.syzygy_lms) {
            self.stats.sig_rejected_at_creation += 1;
            return;
        }
        let partner = if jp.parent == a { b } else { a };
        self.queue.push(jp, partner);
    }

    fn pop(&mut self) -> Option<JPair> {
        let superseded = &self.superseded;
        let popped = self.queue.pop(self.config.dedup, |parent, partner| {
            superseded[parent] || superseded[partner]
        })?;
        self.stats.jpairs_dedup_rejected += popped.dedup_dropped;
        self.stats.jpairs_stale_dropped += popped.stale_dropped;
        self.popped.push(popped.jp.sig.clone());
        Some(popped.jp)
    }

    /// Processes one JPair.
    pub fn step(&mut self) -> Result<GvwEvent, GvwError> {
        let Some(jp) = self.pop() else {
            return Ok(GvwEvent::QueueEmpty);
        };
        if syzygy_reject(&jp.sig, &self.syzygy_lms) {
            self.stats.sig_rejected_at_pop += 1;
            return Ok(GvwEvent::Rejected(RejectReason::Syzygy));
        }
        if cover_reject(&jp, &self.basis, &self.ring) {
            self.stats.jpairs_cover_rejected += 1;
            return Ok(GvwEvent::Rejected(RejectReason::Cover));
        }
        let event = self.reduce_and_absorb(jp)?;
        if event == GvwEvent::BasisExtended && self.config.rereduce {
            self.rereduce_from(self.basis.len() - 1)?;
        }
        Ok(event)
    }

    /// Regularly reduces `t * parent` at the pair's signature and files the
    /// result as a syzygy, a rejection, or a new basis element.
    fn reduce_and_absorb(&mut self, jp: JPair) -> Result<GvwEvent, GvwError> {
        if self.stats.reductions >= self.config.step_limit {
            return Err(GvwError::StepLimit(self.config.step_limit));
        }
        self.stats.reductions += 1;

        let parent = &self.basis[jp.parent];
        let f = self.ring.mul_term(&parent.poly, FieldElem::ONE, &jp.t);
        let reducers: Vec<&LabeledPoly> = self.live.iter().map(|&id| &self.basis[id]).collect();
        let red = regular_reduce_among(&self.ring, &self.mord, &jp.sig, f, &reducers, self.config.tail_reduce);
        let vector = self.config.track_vectors.then(|| self.online_vector(&jp, &red));
        let trace = ProvenanceTrace {
            origin: Origin::JPair {
                t: jp.t.clone(),
                parent: jp.parent,
            },
            steps: red.steps,
            scale: red.scale,
        };

        if red.poly.is_zero() {
            self.stats.zero_reductions += 1;
            if !syzygy_reject(&jp.sig, &self.syzygy_lms) {
                self.push_syzygy(SyzygyRecord {
                    lm: jp.sig,
                    source: SyzygySource::ZeroReduction(trace),
                    vector,
                });
            }
            return Ok(GvwEvent::SyzygyFound);
        }
        if super_reducible(&jp.sig, &red.poly, &self.basis) {
            self.stats.jpairs_super_rejected += 1;
            return Ok(GvwEvent::Rejected(RejectReason::Super));
        }

        let id = self.basis.len();
        self.basis.push(LabeledPoly {
            id,
            sig: jp.sig,
            poly: red.poly,
            trace,
            vector,
        });
        self.superseded.push(false);
        self.live.push(id);
        for k in 0..self.live.len() - 1 {
            let other = self.live[k];
            if self.config.pair_syzygies {
                self.record_pair_syzygy(other, id);
            }
            self.offer_pair(other, id);
        }
        Ok(GvwEvent::BasisExtended)
    }

    /// Elements created before a smaller-signature reducer existed may now be
    /// regularly top-reducible by a newer element. Each such element gets a
    /// further-reduced copy at the same signature; the original stays in the
    /// basis and is marked so it is not revisited.
    fn rereduce_from(&mut self, first: usize) -> Result<(), GvwError> {
        let mut work = vec![first];
        while let Some(n) = work.pop() {
            for gid in 0..self.basis.len() {
                if gid == n || self.superseded[gid] {
                    continue;
                }
                let (g, new) = (&self.basis[gid], &self.basis[n]);
                let Some(t) = g.poly.lm().div(new.poly.lm()) else {
                    continue;
                };
                if self.mord.cmp(&new.sig.mul(&t), &g.sig) != Ordering::Less {
                    continue;
                }
                self.superseded[gid] = true;
                self.live.retain(|&id| id != gid);
                self.stats.rereductions += 1;
                let jp = JPair {
                    t: self.ring.one_mono(),
                    parent: gid,
                    sig: g.sig.clone(),
                    prod_lm: g.poly.lm().clone(),
                };
                if self.reduce_and_absorb(jp)? == GvwEvent::BasisExtended {
                    work.push(self.basis.len() - 1);
                }
            }
        }
        Ok(())
    }

    fn record_pair_syzygy(&mut self, a: usize, b: usize) {
        let (ga, gb) = (&self.basis[a], &self.basis[b]);
        let left = ga.sig.mul(gb.poly.lm());
        let right = gb.sig.mul(ga.poly.lm());
        if left == right {
            return;
        }
        let lm = self.mord.max(&left, &right).clone();
        if syzygy_reject(&lm, &self.syzygy_lms) {
            return;
        }
        let vector = match (&ga.vector, &gb.vector) {
            (Some(va), Some(vb)) => Some(pair_vector(&self.ring, va, &ga.poly, vb, &gb.poly)),
            _ => None,
        };
        self.push_syzygy(SyzygyRecord {
            lm,
            source: SyzygySource::Pair { a, b },
            vector,
        });
    }

    /// `scale * (t * v_parent - sum c * t' * v_reducer)` from stored vectors.
    fn online_vector(&self, jp: &JPair, red: &Reduction) -> ModuleVector {
        let ring = &self.ring;
        let stored = |id: usize| self.basis[id].vector.as_ref().expect("vectors tracked from the start");
        let mut v = stored(jp.parent).mul_term(ring, FieldElem::ONE, &jp.t);
        for s in &red.steps {
            v = v.sub_mul_term(ring, s.coeff, &s.mono, stored(s.reducer));
        }
        v.scale(ring, red.scale)
    }

    /// Runs until the queue is empty.
    pub fn run(&mut self) -> Result<(), GvwError> {
        while self.step()? != GvwEvent::QueueEmpty {}
        Ok(())
    }
}

/// `g_b * v_a - g_a * v_b`, a syzygy whenever `phi(v_a) = g_a` and `phi(v_b) = g_b`.
fn pair_vector(
    ring: &PolyRing,
    va: &ModuleVector,
    ga: &Polynomial,
    vb: &ModuleVector,
    gb: &Polynomial,
) -> ModuleVector {
    va.mul_poly(ring, gb).sub(ring, &vb.mul_poly(ring, ga))
}

/// Runs GVW on nonzero generators and returns the final state.
pub fn gvw_run(
    ring: PolyRing,
    generators: &[Polynomial],
    mord: ModuleOrderKind,
    config: GvwConfig,
) -> Result<GvwState, GvwError> {
    let mut st = GvwState::new(ring, generators, mord, config)?;
    st.run()?;
    Ok(st)
}

/// Drops every module monomial divisible by another one; sorted by index,
/// then exponent vector.
pub fn minimalize(lms: &[ModuleMonomial]) -> Vec<ModuleMonomial> {
    let mut out: Vec<ModuleMonomial> = Vec::new();
    for (k, s) in lms.iter().enumerate() {
        let dominated = lms.iter().enumerate().any(|(j, w)| w.divides(s) && (w != s || j < k));
        if !dominated {
            out.push(s.clone());
        }
    }
    out.sort_by(|a, b| a.index.cmp(&b.index).then_with(|| a.mono.exps().cmp(b.mono.exps())));
    out
}
