//! Obstruction-set mining: exhaustive search over the canonical enumeration,
//! constructive search from seed graphs, and verification of candidate sets.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::canon::{are_isomorphic, canonical_form, enumerate_by_order};
use crate::catalog;
use crate::error::{Error, Result};
use crate::formats::{decode_graph6, encode_graph6};
use crate::graph::{Graph, SplitMode};
use crate::minor::{find_minor_satisfying, is_minor, is_minor_minimal_with, MinimalityMode, MinorMemo};
use crate::par::{self, Exec};
use crate::property::Prop;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Largest order the exhaustive miner accepts.
pub const MAX_MINE_ORDER: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    /// Mining the negation of `property`.
    Not,
    Direct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Completeness {
    CompleteToBound,
    ConstructiveOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub g6: String,
    pub order: usize,
    pub size: usize,
    pub provenance: String,
}

impl ReportEntry {
    fn new(g: &Graph, provenance: String) -> Self {
        let form = canonical_form(g);
        ReportEntry { g6: form.to_graph6(), order: g.order(), size: g.size(), provenance }
    }

    pub fn graph(&self) -> Result<Graph> {
        decode_graph6(&self.g6)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub schema_version: u32,
    pub property: String,
    pub target: Target,
    pub minimality_target: String,
    pub bound: usize,
    pub completeness: Completeness,
    pub order_sensitive: bool,
    pub obstructions: Vec<ReportEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rejected: Vec<ReportEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated: Option<usize>,
    pub notes: Vec<String>,
    pub tool_version: String,
    /// Wall-clock sidecar; omitted from [`ObstructionReport::comparison_json`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_seconds: Option<f64>,
}

impl ObstructionReport {
    fn new(goal: &Prop, bound: usize, completeness: Completeness) -> Self {
        let (property, target) = match goal {
            Prop::Not(p) => (p.to_string(), Target::Not),
            p => (p.to_string(), Target::Direct),
        };
        ObstructionReport {
            schema_version: SCHEMA_VERSION,
            property,
            target,
            minimality_target: goal.to_string(),
            bound,
            completeness,
            order_sensitive: goal.order_sensitive(),
            obstructions: Vec::new(),
            rejected: Vec::new(),
            generated: None,
            notes: Vec::new(),
            tool_version: TOOL_VERSION.to_string(),
            runtime_seconds: None,
        }
    }

    pub fn graphs(&self) -> Result<Vec<Graph>> {
        self.obstructions.iter().map(ReportEntry::graph).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON without the runtime sidecar; identical inputs give identical bytes.
    pub fn comparison_json(&self) -> String {
        let mut r = self.clone();
        r.runtime_seconds = None;
        r.to_json()
    }

    /// Count of obstructions per (order, size), one line each.
    pub fn summary_table(&self) -> String {
        let mut rows: Vec<(usize, usize, usize)> = Vec::new();
        for e in &self.obstructions {
            match rows.last_mut() {
                Some(r) if (r.0, r.1) == (e.order, e.size) => r.2 += 1,
                _ => rows.push((e.order, e.size, 1)),
            }
        }
        let mut out = String::from("order  size  count\n");
        for (n, m, c) in rows {
            out.push_str(&format!("{n:>5}  {m:>4}  {c:>5}\n"));
        }
        out.push_str(&format!("total {}\n", self.obstructions.len()));
        out
    }

    fn finish(&mut self) {
        self.obstructions.sort_by_cached_key(sort_key);
        let padded: Vec<&str> = self
            .obstructions
            .iter()
            .filter(|e| e.graph().map(|g| g.isolated_vertices() > 0).unwrap_or(false))
            .map(|e| e.g6.as_str())
            .collect();
        if !padded.is_empty() {
            self.notes.push(format!("obstructions with isolated vertices: {}", padded.join(", ")));
        }
    }
}

fn sort_key(e: &ReportEntry) -> (usize, usize, Graph) {
    let g = e.graph().expect("report entries hold valid graph6");
    (e.order, e.size, g)
}

/// Resumable progress of an exhaustive run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub schema_version: u32,
    pub minimality_target: String,
    pub bound: usize,
    /// Next graph to process: order and index within that order.
    pub order: usize,
    pub index: usize,
    pub found: Vec<ReportEntry>,
}

#[derive(Clone, Debug)]
pub struct MineConfig {
    pub exec: Exec,
    pub budget: Option<Duration>,
    pub resume: Option<Checkpoint>,
    pub memo_capacity: usize,
    /// Graphs per work batch; the budget is checked between batches.
    pub batch: usize,
}

impl Default for MineConfig {
    fn default() -> Self {
        MineConfig {
            exec: Exec::default(),
            budget: None,
            resume: None,
            memo_capacity: MinorMemo::DEFAULT_CAPACITY,
            batch: 4096,
        }
    }
}

impl MineConfig {
    pub fn with_exec(exec: Exec) -> Self {
        MineConfig { exec, ..MineConfig::default() }
    }
}

/// All minor-minimal graphs for `goal` of order at most `max_order`.
///
/// When the complement of `goal` is declared minor-closed, candidates are
/// screened with one-step minimality and skipped early if an obstruction of
/// smaller order is a minor; survivors are re-certified in full mode.
pub fn mine_exhaustive(goal: &Prop, max_order: usize, config: &MineConfig) -> Result<ObstructionReport> {
    if max_order > MAX_MINE_ORDER {
        return Err(Error::Capacity { requested: max_order, limit: MAX_MINE_ORDER });
    }
    goal.check_capacity(max_order)?;
    let start = Instant::now();
    let target_text = goal.to_string();
    let (mut order0, mut index0, mut found) = (1, 0, Vec::new());
    if let Some(cp) = &config.resume {
        if cp.minimality_target != target_text || cp.bound != max_order {
            return Err(Error::Invalid(format!(
                "checkpoint is for `{}` to order {}, not `{}` to order {}",
                cp.minimality_target, cp.bound, target_text, max_order
            )));
        }
        (order0, index0, found) = (cp.order, cp.index, cp.found.clone());
    }
    let one_step = goal.complement_declared_closed();
    let mode = if one_step { MinimalityMode::OneStep } else { MinimalityMode::Full };
    let memo = MinorMemo::new(config.memo_capacity);
    let levels = enumerate_by_order(max_order, None, config.exec)?;
    // every call processes at least one batch, so resumed runs make progress
    let mut progressed = false;

    for (li, level) in levels.iter().enumerate() {
        let order = li + 1;
        if order < order0 {
            continue;
        }
        let dominators: Vec<Graph> = if one_step {
            found.iter().filter(|e: &&ReportEntry| e.order < order).map(|e| e.graph()).collect::<Result<_>>()?
        } else {
            Vec::new()
        };
        let first = if order == order0 { index0 } else { 0 };
        let mut at = first;
        while at < level.len() {
            if let Some(budget) = config.budget {
                if progressed && start.elapsed() > budget {
                    return Err(Error::BudgetExceeded(Box::new(Checkpoint {
                        schema_version: SCHEMA_VERSION,
                        minimality_target: target_text,
                        bound: max_order,
                        order,
                        index: at,
                        found,
                    })));
                }
            }
            let end = (at + config.batch.max(1)).min(level.len());
            let idx: Vec<usize> = (at..end).collect();
            let hits = par::map(config.exec, &idx, |&i| {
                let g = &level[i];
                if dominators.iter().any(|h| h.size() <= g.size() && is_minor(g, h)) {
                    return None;
                }
                let minimal = is_minor_minimal_with(g, goal, mode, &memo).expect("mode checked");
                minimal.then(|| ReportEntry::new(g, format!("enum:order={order},index={i}")))
            });
            found.extend(hits.into_iter().flatten());
            at = end;
            progressed = true;
        }
    }

    let mut report = ObstructionReport::new(goal, max_order, Completeness::CompleteToBound);
    let certified = par::map(config.exec, &found, |e| {
        let g = e.graph().expect("valid graph6");
        is_minor_minimal_with(&g, goal, MinimalityMode::Full, &memo).expect("full mode")
    });
    for (e, ok) in found.into_iter().zip(certified) {
        if ok {
            report.obstructions.push(e);
        } else {
            report.notes.push(format!("{} dropped: failed full-mode re-certification", e.g6));
        }
    }
    if !one_step {
        report.notes.push("complement not declared minor-closed; full-mode minimality used throughout".into());
    }
    report.finish();
    report.runtime_seconds = Some(start.elapsed().as_secs_f64());
    Ok(report)
}

/// Augmentation steps for constructive mining.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AugmentOp {
    /// Disjoint union with K2.
    DisjointK2,
    /// One-point union with K2 (a pendant edge), at every vertex.
    DotcupK2,
    AddEdge,
    /// Split a vertex, partitioning its neighbors between the two halves.
    VertexSplit,
    /// Split a vertex, with every neighbor adjacent to either or both halves.
    VertexSplitCover,
}

impl AugmentOp {
    pub const STANDARD: [AugmentOp; 4] =
        [AugmentOp::DisjointK2, AugmentOp::DotcupK2, AugmentOp::AddEdge, AugmentOp::VertexSplit];

    pub fn name(self) -> &'static str {
        match self {
            AugmentOp::DisjointK2 => "disjoint-k2",
            AugmentOp::DotcupK2 => "dotcup-k2",
            AugmentOp::AddEdge => "add-edge",
            AugmentOp::VertexSplit => "vertex-split",
            AugmentOp::VertexSplitCover => "vertex-split-cover",
        }
    }

    fn apply(self, g: &Graph) -> Result<Vec<(Graph, String)>> {
        let k2 = Graph::complete(2);
        let mut out = Vec::new();
        match self {
            AugmentOp::DisjointK2 => out.push((g.disjoint_union(&k2)?, self.name().to_string())),
            AugmentOp::DotcupK2 => {
                for v in 0..g.order() {
                    out.push((g.one_point_union(v, &k2, 0)?, format!("{}({v})", self.name())));
                }
            }
            AugmentOp::AddEdge => {
                for a in 0..g.order() {
                    for b in a + 1..g.order() {
                        if !g.has_edge(a, b) {
                            let e = crate::graph::Edge::new(a, b)?;
                            out.push((g.add_edge(e)?, format!("{}({e})", self.name())));
                        }
                    }
                }
            }
            AugmentOp::VertexSplit | AugmentOp::VertexSplitCover => {
                let mode = if self == AugmentOp::VertexSplit { SplitMode::Partition } else { SplitMode::Cover };
                let n = g.order();
                for v in 0..n {
                    for h in g.vertex_splits_with(v, mode)? {
                        let label = format!("{}({v}:{}|{})", self.name(), h.degree(v) - 1, h.degree(n) - 1);
                        out.push((h, label));
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for AugmentOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AugmentOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<AugmentOp> {
        let all = [
            AugmentOp::DisjointK2,
            AugmentOp::DotcupK2,
            AugmentOp::AddEdge,
            AugmentOp::VertexSplit,
            AugmentOp::VertexSplitCover,
        ];
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        all.into_iter()
            .find(|op| op.name() == key)
            .ok_or_else(|| Error::Invalid(format!("unknown augmentation `{s}`")))
    }
}

fn describe(g: &Graph) -> String {
    catalog::identify(g).map(str::to_string).unwrap_or_else(|| canonical_form(g).to_graph6())
}

/// Grow `seeds` under `ops` for `rounds` rounds, then keep the graphs that
/// satisfy `goal` and are minor-minimal for it. Seeds are candidates too.
/// Every rejected candidate is recorded with the reason and, for
/// non-minimal ones, a smaller witness.
pub fn mine_constructive(
    seeds: &[(String, Graph)],
    ops: &[AugmentOp],
    goal: &Prop,
    rounds: usize,
    config: &MineConfig,
) -> Result<ObstructionReport> {
    if seeds.is_empty() {
        return Err(Error::Invalid("constructive mining needs at least one seed".into()));
    }
    let start = Instant::now();
    let mut seen = HashSet::new();
    let mut pool: Vec<(Graph, String)> = Vec::new();
    for (name, g) in seeds {
        if seen.insert(canonical_form(g)) {
            pool.push((*g, format!("seed:{name}")));
        }
    }
    let mut frontier = pool.clone();
    let mut generated = 0;
    for _ in 0..rounds {
        let mut next = Vec::new();
        for (g, prov) in &frontier {
            for op in ops {
                for (child, label) in op.apply(g)? {
                    let form = canonical_form(&child);
                    if seen.insert(form) {
                        next.push((form.into_graph(), format!("{prov} -> {label}")));
                    }
                }
            }
        }
        generated += next.len();
        pool.extend(next.iter().cloned());
        frontier = next;
    }
    let bound = pool.iter().map(|(g, _)| g.order()).max().unwrap_or(0);
    goal.check_capacity(bound)?;

    let memo = MinorMemo::new(config.memo_capacity);
    let verdicts = par::map(config.exec, &pool, |(g, _)| {
        if !goal.eval(g) {
            return Err("reject: target fails".to_string());
        }
        match find_minor_satisfying(g, goal, &memo) {
            None => Ok(()),
            Some((w, _)) => Err(format!("reject: non-minimal, minor {}", describe(&w))),
        }
    });

    let mut report = ObstructionReport::new(goal, bound, Completeness::ConstructiveOnly);
    report.generated = Some(generated);
    for ((g, prov), v) in pool.iter().zip(verdicts) {
        match v {
            Ok(()) => report.obstructions.push(ReportEntry::new(g, prov.clone())),
            Err(why) => report.rejected.push(ReportEntry::new(g, format!("{prov} -> {why}"))),
        }
    }
    report.finish();
    report.runtime_seconds = Some(start.elapsed().as_secs_f64());
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateVerdict {
    pub name: String,
    pub g6: String,
    pub satisfies_target: bool,
    pub minimal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CandidateVerdict {
    pub fn pass(&self) -> bool {
        self.satisfies_target && self.minimal
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Layer {
    pub pass: bool,
    pub detail: Vec<String>,
}

/// Layered result of checking a candidate obstruction set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetVerdict {
    pub minimality_target: String,
    pub bound: usize,
    pub candidates: Vec<CandidateVerdict>,
    /// Every candidate satisfies the target and is minor-minimal.
    pub minimality: Layer,
    /// No candidate is a minor of another.
    pub incomparability: Layer,
    /// No minor-minimal graph up to the bound is missing from the set.
    pub completeness: Layer,
}

impl SetVerdict {
    pub fn pass(&self) -> bool {
        self.minimality.pass && self.incomparability.pass && self.completeness.pass
    }
}

/// Check a candidate obstruction set for `goal`, layer by layer, with an
/// exhaustive completeness scan to `max_order`.
pub fn verify_set(candidates: &[(String, Graph)], goal: &Prop, max_order: usize, config: &MineConfig) -> SetVerdict {
    let memo = MinorMemo::new(config.memo_capacity);
    let per: Vec<CandidateVerdict> = par::map(config.exec, candidates, |(name, g)| {
        let g6 = encode_graph6(g);
        if let Err(e) = goal.check_capacity(g.order()) {
            return CandidateVerdict { name: name.clone(), g6, satisfies_target: false, minimal: false, witness: Some(e.to_string()) };
        }
        let satisfies_target = goal.eval(g);
        let witness = find_minor_satisfying(g, goal, &memo).map(|(w, _)| describe(&w));
        CandidateVerdict { name: name.clone(), g6, satisfies_target, minimal: witness.is_none(), witness }
    });
    let minimality = Layer {
        pass: per.iter().all(CandidateVerdict::pass),
        detail: per
            .iter()
            .filter(|c| !c.pass())
            .map(|c| match (&c.witness, c.satisfies_target) {
                (_, false) => format!("{}: target fails", c.name),
                (Some(w), true) => format!("{}: has proper minor {w} satisfying the target", c.name),
                (None, true) => unreachable!("passing candidate filtered"),
            })
            .collect(),
    };

    let mut pairs = Vec::new();
    for (i, (na, a)) in candidates.iter().enumerate() {
        for (j, (nb, b)) in candidates.iter().enumerate() {
            if i != j && a.order() <= b.order() && a.size() <= b.size() && is_minor(b, a) && (i < j || !is_minor(a, b)) {
                pairs.push(format!("{na} is a minor of {nb}"));
            }
        }
    }
    let incomparability = Layer { pass: pairs.is_empty(), detail: pairs };

    let completeness = match mine_exhaustive(goal, max_order, config) {
        Ok(report) => {
            let mined = report.graphs().expect("mined graphs decode");
            let missing: Vec<String> = mined
                .iter()
                .filter(|h| !candidates.iter().any(|(_, g)| are_isomorphic(g, h)))
                .map(describe)
                .collect();
            Layer { pass: missing.is_empty(), detail: missing.into_iter().map(|m| format!("missing {m}")).collect() }
        }
        Err(e) => Layer { pass: false, detail: vec![format!("scan failed: {e}")] },
    };

    SetVerdict { minimality_target: goal.to_string(), bound: max_order, candidates: per, minimality, incomparability, completeness }
}
