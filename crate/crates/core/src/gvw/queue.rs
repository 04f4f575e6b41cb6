use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap, HashMap, HashSet};
use std::sync::Arc;

use crate::poly::PolyRing;
use crate::sig::{JPair, ModuleMonomial, ModuleOrder};

use super::SelectionStrategy;

#[derive(Debug)]
struct Context {
    ring: PolyRing,
    mord: ModuleOrder,
    strategy: SelectionStrategy,
    gen_degrees: Vec<u32>,
}

impl Context {
    fn sugar(&self, jp: &JPair) -> u32 {
        jp.sig.mono.deg() + self.gen_degrees[jp.sig.index]
    }

    fn priority(&self, a: &Entry, b: &Entry) -> Ordering {
        let by_sig = || {
            self.mord
                .cmp(&a.jp.sig, &b.jp.sig)
                .then_with(|| self.ring.cmp(&a.jp.prod_lm, &b.jp.prod_lm))
                .then_with(|| a.jp.parent.cmp(&b.jp.parent))
                .then_with(|| a.seq.cmp(&b.seq))
        };
        match self.strategy {
            SelectionStrategy::MinSig => by_sig(),
            SelectionStrategy::MinDegree => self.sugar(&a.jp).cmp(&self.sugar(&b.jp)).then_with(by_sig),
            SelectionStrategy::Fifo => a.seq.cmp(&b.seq),
        }
    }
}

#[derive(Debug, Clone)]
struct Entry {
    jp: JPair,
    partner: usize,
    seq: usize,
    ctx: Arc<Context>,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.seq == other.seq
    }
}

impl Eq for Entry {}

impl Ord for Entry {
    // Reversed: `BinaryHeap` pops the greatest element.
    fn cmp(&self, other: &Self) -> Ordering {
        self.ctx.priority(other, self)
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Result of a pop: the surviving pair and what was discarded alongside it.
#[derive(Debug, Clone)]
pub(super) struct Popped {
    pub jp: JPair,
    pub dedup_dropped: usize,
    pub stale_dropped: usize,
}

/// Priority queue of JPairs with an index by signature for deduplication.
#[derive(Debug, Clone)]
pub(super) struct PairQueue {
    ctx: Arc<Context>,
    heap: BinaryHeap<Entry>,
    dead: HashSet<usize>,
    /// Queued pairs by signature, keyed by sequence number, holding the partner id.
    by_sig: HashMap<ModuleMonomial, BTreeMap<usize, (JPair, usize)>>,
    next_seq: usize,
}

impl PairQueue {
    pub(super) fn new(ring: PolyRing, mord: ModuleOrder, strategy: SelectionStrategy, gen_degrees: Vec<u32>) -> Self {
        PairQueue {
            ctx: Arc::new(Context {
                ring,
                mord,
                strategy,
                gen_degrees,
            }),
            heap: BinaryHeap::new(),
            dead: HashSet::new(),
            by_sig: HashMap::new(),
            next_seq: 0,
        }
    }

    pub(super) fn len(&self) -> usize {
        self.heap.len() - self.dead.len()
    }

    /// Queues `jp`, formed from its parent and `partner`.
    pub(super) fn push(&mut self, jp: JPair, partner: usize) {
        let seq = self.next_seq;
        self.next_seq += 1;
        self.by_sig
            .entry(jp.sig.clone())
            .or_default()
            .insert(seq, (jp.clone(), partner));
        self.heap.push(Entry {
            jp,
            partner,
            seq,
            ctx: Arc::clone(&self.ctx),
        });
    }

    /// Pops the strategy-minimal live pair. Pairs for which `stale(parent,
    /// partner)` holds are discarded. With `dedup`, every other live pair of
    /// the same signature is dropped too, and the survivor is the one with
    /// the smallest product leading monomial, then parent id.
    pub(super) fn pop(&mut self, dedup: bool, stale: impl Fn(usize, usize) -> bool) -> Option<Popped> {
        let mut stale_dropped = 0;
        let first = loop {
            let e = self.heap.pop()?;
            if self.dead.remove(&e.seq) {
                continue;
            }
            if stale(e.jp.parent, e.partner) {
                stale_dropped += 1;
                self.forget(&e.jp.sig, e.seq);
                continue;
            }
            break e;
        };
        let mut group = self.by_sig.remove(&first.jp.sig).unwrap_or_default();
        group.remove(&first.seq);
        if !dedup {
            if !group.is_empty() {
                self.by_sig.insert(first.jp.sig.clone(), group);
            }
            return Some(Popped {
                jp: first.jp,
                dedup_dropped: 0,
                stale_dropped,
            });
        }
        let mut dedup_dropped = 0;
        let ring = &self.ctx.ring;
        let mut keep = (first.seq, first.jp);
        for (seq, (jp, partner)) in group {
            self.dead.insert(seq);
            if stale(jp.parent, partner) {
                stale_dropped += 1;
                continue;
            }
            dedup_dropped += 1;
            let other_wins = ring
                .cmp(&jp.prod_lm, &keep.1.prod_lm)
                .then_with(|| jp.parent.cmp(&keep.1.parent))
                == Ordering::Less;
            if other_wins {
                keep = (seq, jp);
            }
        }
        Some(Popped {
            jp: keep.1,
            dedup_dropped,
            stale_dropped,
        })
    }

    fn forget(&mut self, sig: &ModuleMonomial, seq: usize) {
        if let Some(group) = self.by_sig.get_mut(sig) {
            group.remove(&seq);
            if group.is_empty() {
                self.by_sig.remove(sig);
            }
        }
    }
}
