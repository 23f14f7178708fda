//! Minor containment with branch-set witnesses, one-step minors, and
//! minor-minimality checks.

use std::collections::HashSet;
use std::num::NonZeroUsize;

use lru::LruCache;
use parking_lot::Mutex;
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{bits, Edge, Graph};
use crate::property::Prop;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MinorOp {
    DeleteVertex,
    DeleteEdge,
    ContractEdge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Locus {
    Vertex(usize),
    Edge(Edge),
}

impl std::fmt::Display for Locus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Locus::Vertex(v) => write!(f, "{v}"),
            Locus::Edge(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OneStepMinor {
    pub op: MinorOp,
    pub locus: Locus,
    pub result: Graph,
}

impl std::fmt::Display for OneStepMinor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let op = match self.op {
            MinorOp::DeleteVertex => "delete-vertex",
            MinorOp::DeleteEdge => "delete-edge",
            MinorOp::ContractEdge => "contract-edge",
        };
        write!(f, "{op} {}", self.locus)
    }
}

/// Every vertex deletion, edge deletion and edge contraction of `g`, in that
/// order, without deduplication. The null graph is never produced: a single
/// vertex has no one-step minors.
pub fn all_one_step_minors(g: &Graph) -> impl Iterator<Item = OneStepMinor> + '_ {
    let deletable = if g.order() > 1 { g.order() } else { 0 };
    let vdel = (0..deletable).map(move |v| OneStepMinor {
        op: MinorOp::DeleteVertex,
        locus: Locus::Vertex(v),
        result: g.without_vertex(v),
    });
    let edel = g.edges().map(move |e| OneStepMinor {
        op: MinorOp::DeleteEdge,
        locus: Locus::Edge(e),
        result: g.without_edge(e.u(), e.v()),
    });
    let con = g.edges().map(move |e| OneStepMinor {
        op: MinorOp::ContractEdge,
        locus: Locus::Edge(e),
        result: g.contracted(e.u(), e.v()),
    });
    vdel.chain(edel).chain(con)
}

/// One-step minors deduplicated by isomorphism class of the result; the
/// first (least) locus of each class is kept.
pub fn one_step_minors(g: &Graph) -> Vec<OneStepMinor> {
    let mut seen = HashSet::new();
    all_one_step_minors(g).filter(|m| seen.insert(canonical_form(&m.result))).collect()
}

/// Witness that a pattern is a minor of a host: one branch set (a host
/// vertex mask) per pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    pub branch_sets: Vec<u32>,
}

impl MinorModel {
    /// Check the model invariants against `host` and `pattern`.
    pub fn validate(&self, host: &Graph, pattern: &Graph) -> std::result::Result<(), String> {
        if self.branch_sets.len() != pattern.order() {
            return Err(format!("{} branch sets for {} pattern vertices", self.branch_sets.len(), pattern.order()));
        }
        let mut used = 0u32;
        for (p, &b) in self.branch_sets.iter().enumerate() {
            if b == 0 {
                return Err(format!("branch set of {p} is empty"));
            }
            if b & !host.vertex_mask() != 0 {
                return Err(format!("branch set of {p} leaves the host"));
            }
            if b & used != 0 {
                return Err(format!("branch set of {p} overlaps another"));
            }
            used |= b;
            if host.reach(b.trailing_zeros() as usize, b) != b {
                return Err(format!("branch set of {p} is disconnected"));
            }
        }
        for e in pattern.edges() {
            let (a, b) = (self.branch_sets[e.u()], self.branch_sets[e.v()]);
            if !bits(a).any(|v| host.neighbors(v) & b != 0) {
                return Err(format!("no host edge realizes pattern edge {e}"));
            }
        }
        Ok(())
    }
}

fn neighborhood(g: &Graph, set: u32) -> u32 {
    bits(set).fold(0, |acc, v| acc | g.neighbors(v)) & !set
}

/// Report every connected `S ⊇ start` with `S ⊆ allowed`, `|S| ≤ max`.
/// Each set is visited once; returning `true` from `f` stops the walk.
fn connected_supersets(g: &Graph, set: u32, allowed: u32, max: u32, f: &mut dyn FnMut(u32) -> bool) -> bool {
    if set.count_ones() >= max {
        return f(set);
    }
    let ext = neighborhood(g, set) & allowed;
    if ext == 0 {
        return f(set);
    }
    let x = ext.trailing_zeros();
    connected_supersets(g, set | 1 << x, allowed, max, f) || connected_supersets(g, set, allowed & !(1 << x), max, f)
}

struct MinorSearch<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    twin_prev: Vec<Option<usize>>,
    isolated: Vec<usize>,
    sets: Vec<u32>,
}

impl<'a> MinorSearch<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph) -> Self {
        let np = pattern.order();
        let isolated: Vec<usize> = (0..np).filter(|&v| pattern.degree(v) == 0).collect();
        let mut order = Vec::new();
        let mut placed = 0u32;
        let active: Vec<usize> = (0..np).filter(|&v| pattern.degree(v) > 0).collect();
        while order.len() < active.len() {
            let next = active
                .iter()
                .copied()
                .filter(|&v| placed & (1 << v) == 0)
                .max_by_key(|&v| {
                    let linked = (pattern.neighbors(v) & placed).count_ones();
                    (linked, pattern.degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex remains");
            placed |= 1 << next;
            order.push(next);
        }
        let twins = |a: usize, b: usize| pattern.neighbors(a) & !(1 << b) == pattern.neighbors(b) & !(1 << a);
        let twin_prev = (0..order.len())
            .map(|i| (0..i).rev().find(|&j| twins(order[i], order[j])).map(|j| order[j]))
            .collect();
        MinorSearch { host, pattern, order, twin_prev, isolated, sets: vec![0; np] }
    }

    fn place(&mut self, idx: usize, used: u32) -> bool {
        let free = self.host.vertex_mask() & !used;
        if idx == self.order.len() {
            if (free.count_ones() as usize) < self.isolated.len() {
                return false;
            }
            let mut spare = free;
            for &p in &self.isolated {
                let v = spare.trailing_zeros();
                self.sets[p] = 1 << v;
                spare &= spare - 1;
            }
            return true;
        }
        let left_after = (self.order.len() - idx - 1 + self.isolated.len()) as u32;
        if free.count_ones() < left_after + 1 {
            return false;
        }
        let max = free.count_ones() - left_after;
        let p = self.order[idx];
        let placed_mask: u32 = self.order[..idx].iter().fold(0, |m, &q| m | 1 << q);
        let placed_nbrs: Vec<usize> = bits(self.pattern.neighbors(p) & placed_mask).collect();
        let unplaced_nbrs = (self.pattern.neighbors(p) & !placed_mask).count_ones();

        let mut allowed = free;
        if let Some(t) = self.twin_prev[idx] {
            let floor = self.sets[t].trailing_zeros();
            allowed &= !((1u32 << floor) | ((1u32 << floor) - 1));
        }
        // anchor on the placed neighbor whose set has the fewest free neighbors
        let anchors = placed_nbrs
            .iter()
            .map(|&q| neighborhood(self.host, self.sets[q]) & allowed)
            .min_by_key(|m| m.count_ones())
            .unwrap_or(allowed);

        let mut remaining = anchors;
        let mut excluded = 0u32;
        while remaining != 0 {
            let a = remaining.trailing_zeros();
            remaining &= remaining - 1;
            let within = allowed & !excluded;
            excluded |= 1 << a;
            let mut candidates = Vec::new();
            connected_supersets(self.host, 1 << a, within, max, &mut |b| {
                candidates.push(b);
                false
            });
            for b in candidates {
                let nb = neighborhood(self.host, b);
                if placed_nbrs.iter().any(|&q| nb & self.sets[q] == 0) {
                    continue;
                }
                if (nb & free & !b).count_ones() < unplaced_nbrs {
                    continue;
                }
                self.sets[p] = b;
                if self.place(idx + 1, used | b) {
                    return true;
                }
            }
        }
        self.sets[p] = 0;
        false
    }
}

/// Find a minor model of `pattern` in `host`, if one exists.
pub fn has_minor(host: &Graph, pattern: &Graph) -> Option<MinorModel> {
    if pattern.order() > host.order() || pattern.size() > host.size() {
        return None;
    }
    let mut search = MinorSearch::new(host, pattern);
    if search.place(0, 0) {
        Some(MinorModel { branch_sets: search.sets })
    } else {
        None
    }
}

pub fn is_minor(host: &Graph, pattern: &Graph) -> bool {
    has_minor(host, pattern).is_some()
}

/// Proper minor: a minor that is not isomorphic to the host.
pub fn is_proper_minor(host: &Graph, pattern: &Graph) -> bool {
    (pattern.order(), pattern.size()) != (host.order(), host.size()) && is_minor(host, pattern)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinimalityMode {
    /// Only one-step minors are tested. Legal when the complement of the
    /// property is declared minor-closed.
    OneStep,
    /// Every proper minor is tested.
    Full,
}

/// Memo of "some minor (including the graph itself) satisfies the
/// property", keyed by canonical form. One memo per property.
pub struct MinorMemo {
    cache: Mutex<LruCache<CanonicalForm, bool>>,
}

impl MinorMemo {
    pub const DEFAULT_CAPACITY: usize = 1 << 20;

    pub fn new(capacity: usize) -> Self {
        let cap = NonZeroUsize::new(capacity.max(1)).expect("non-zero");
        MinorMemo { cache: Mutex::new(LruCache::new(cap)) }
    }

    pub fn len(&self) -> usize {
        self.cache.lock().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Default for MinorMemo {
    fn default() -> Self {
        MinorMemo::new(Self::DEFAULT_CAPACITY)
    }
}

/// Does some minor of `g` (including `g`) satisfy `p`?
pub fn has_minor_satisfying(g: &Graph, p: &Prop, memo: &MinorMemo) -> bool {
    let key = canonical_form(g);
    if let Some(&hit) = memo.cache.lock().get(&key) {
        return hit;
    }
    let found = p.eval(g) || one_step_minors(g).iter().any(|m| has_minor_satisfying(&m.result, p, memo));
    memo.cache.lock().put(key, found);
    found
}

/// A proper minor of `g` satisfying `p`, found by descending one step at a
/// time, with the derivation path.
pub fn find_minor_satisfying(g: &Graph, p: &Prop, memo: &MinorMemo) -> Option<(Graph, Vec<OneStepMinor>)> {
    let mut path = Vec::new();
    let mut cur = *g;
    'descend: loop {
        for m in one_step_minors(&cur) {
            if has_minor_satisfying(&m.result, p, memo) {
                path.push(m);
                cur = m.result;
                if p.eval(&cur) && !one_step_minors(&cur).iter().any(|n| has_minor_satisfying(&n.result, p, memo)) {
                    return Some((cur, path));
                }
                continue 'descend;
            }
        }
        return if path.is_empty() { None } else { Some((cur, path)) };
    }
}

/// `g` satisfies `p` and no proper minor does.
pub fn is_minor_minimal(g: &Graph, p: &Prop, mode: MinimalityMode) -> Result<bool> {
    is_minor_minimal_with(g, p, mode, &MinorMemo::default())
}

pub fn is_minor_minimal_with(g: &Graph, p: &Prop, mode: MinimalityMode, memo: &MinorMemo) -> Result<bool> {
    match mode {
        MinimalityMode::OneStep => {
            if !p.complement_declared_closed() {
                return Err(Error::OneStepNotAllowed(p.to_string()));
            }
            Ok(p.eval(g) && all_one_step_minors(g).all(|m| !p.eval(&m.result)))
        }
        MinimalityMode::Full => {
            Ok(p.eval(g) && one_step_minors(g).iter().all(|m| !has_minor_satisfying(&m.result, p, memo)))
        }
    }
}
