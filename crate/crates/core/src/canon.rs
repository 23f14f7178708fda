//! Canonical labeling, isomorphism testing and enumeration of
//! non-isomorphic graphs.
//!
//! Labeling is individualization-refinement: an equitable ordered partition
//! is refined by neighbor counts, then the first non-singleton cell is
//! branched on. Every leaf yields a relabeled graph and the least one is
//! canonical. Automorphisms found at leaves prune sibling branches
//! (stabilizer orbits) and let the search jump back to the node where the
//! current path left the first or best path.
//!
//! Enumeration uses canonical augmentation: a child `P + v` of a canonical
//! parent `P` is kept only when `v` lies in the automorphism orbit of the
//! canonically chosen deletion vertex of the child.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::par::{self, Exec};

/// Isomorphism-invariant key: the canonically relabeled graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Graph);

impl CanonicalForm {
    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    pub fn to_graph6(&self) -> String {
        crate::formats::encode_graph6(&self.0)
    }
}

/// Result of a canonical labeling run.
#[derive(Clone, Debug)]
pub struct Canonization {
    /// `labeling[i]` is the vertex placed at canonical position `i`.
    pub labeling: Vec<u8>,
    pub form: CanonicalForm,
    /// Automorphisms found during the search, as vertex maps. They generate
    /// the full automorphism group.
    pub generators: Vec<Vec<u8>>,
}

impl Canonization {
    /// Orbit id (least member) of every vertex under the automorphism group.
    pub fn orbits(&self) -> Vec<u8> {
        let n = self.labeling.len();
        let mut uf = UnionFind::new(n);
        for g in &self.generators {
            for (v, &w) in g.iter().enumerate() {
                uf.union(v, w as usize);
            }
        }
        (0..n).map(|v| uf.find(v) as u8).collect()
    }

    /// Canonical position of every vertex.
    pub fn positions(&self) -> Vec<u8> {
        let mut pos = vec![0u8; self.labeling.len()];
        for (i, &v) in self.labeling.iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        pos
    }
}

struct UnionFind {
    parent: [u8; 32],
}

impl UnionFind {
    fn new(n: usize) -> Self {
        let mut parent = [0u8; 32];
        for (i, p) in parent.iter_mut().enumerate().take(n) {
            *p = i as u8;
        }
        UnionFind { parent }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // keep the smaller id as root so roots are orbit minima
        if ra < rb {
            self.parent[rb] = ra as u8;
        } else if rb < ra {
            self.parent[ra] = rb as u8;
        }
    }
}

/// Split cells until every vertex in a cell has the same number of
/// neighbors in every cell. Sub-cells are ordered by ascending count.
fn refine(g: &Graph, cells: &mut Vec<u32>) {
    let mut buckets = [0u32; 33];
    let mut next: Vec<u32> = Vec::with_capacity(g.order());
    loop {
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() {
            let splitter = cells[si];
            next.clear();
            let mut split_here = false;
            for &cell in cells.iter() {
                if cell & (cell - 1) == 0 {
                    next.push(cell);
                    continue;
                }
                let (mut lo, mut hi) = (usize::MAX, 0);
                for v in bits(cell) {
                    let k = (g.neighbors(v) & splitter).count_ones() as usize;
                    buckets[k] |= 1 << v;
                    lo = lo.min(k);
                    hi = hi.max(k);
                }
                if lo == hi {
                    buckets[lo] = 0;
                    next.push(cell);
                    continue;
                }
                split_here = true;
                for b in &mut buckets[lo..=hi] {
                    if *b != 0 {
                        next.push(*b);
                        *b = 0;
                    }
                }
            }
            if split_here {
                std::mem::swap(cells, &mut next);
                changed = true;
            }
            si += 1;
        }
        if !changed {
            break;
        }
    }
}

struct Leaf {
    path: Vec<u8>,
    labeling: Vec<u8>,
    graph: Graph,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<u8>>,
    path: Vec<u8>,
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl<'a> Search<'a> {
    fn automorphism(from: &[u8], to: &[u8]) -> Vec<u8> {
        let mut perm = vec![0u8; from.len()];
        for (a, b) in from.iter().zip(to) {
            perm[*a as usize] = *b;
        }
        perm
    }

    fn leaf(&mut self, cells: &[u32]) -> Option<usize> {
        let labeling: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let mut perm = vec![0usize; labeling.len()];
        for (i, &v) in labeling.iter().enumerate() {
            perm[v as usize] = i;
        }
        let graph = self.g.permuted(&perm);
        let Some(first) = &self.first else {
            let leaf = Leaf { path: self.path.clone(), labeling, graph };
            self.best = Some(Leaf { path: leaf.path.clone(), labeling: leaf.labeling.clone(), graph });
            self.first = Some(leaf);
            return None;
        };
        if graph == first.graph {
            let auto = Self::automorphism(&first.labeling, &labeling);
            let level = common_prefix(&first.path, &self.path);
            self.generators.push(auto);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best set with first");
        if graph == best.graph {
            let auto = Self::automorphism(&best.labeling, &labeling);
            let level = common_prefix(&best.path, &self.path);
            self.generators.push(auto);
            return Some(level);
        }
        if graph < best.graph {
            self.best = Some(Leaf { path: self.path.clone(), labeling, graph });
        }
        None
    }

    /// Explore the node for `cells`. Returns `Some(level)` when the search
    /// should unwind to the node at depth `level`.
    fn node(&mut self, mut cells: Vec<u32>) -> Option<usize> {
        refine(self.g, &mut cells);
        let depth = self.path.len();
        let Some(target) = cells.iter().position(|c| c & (c - 1) != 0) else {
            return self.leaf(&cells);
        };
        let cell = cells[target];
        let mut explored = 0u32;
        for v in bits(cell) {
            if explored != 0 && self.equivalent_to_explored(v, explored) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            self.path.push(v as u8);
            let jump = self.node(child);
            self.path.pop();
            explored |= 1 << v;
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    /// Is `v` in the orbit of an explored vertex under the automorphisms
    /// found so far that fix the current path pointwise?
    fn equivalent_to_explored(&self, v: usize, explored: u32) -> bool {
        let mut uf = UnionFind::new(self.g.order());
        let mut any = false;
        for gen in &self.generators {
            if self.path.iter().all(|&p| gen[p as usize] == p) {
                any = true;
                for (a, &b) in gen.iter().enumerate() {
                    uf.union(a, b as usize);
                }
            }
        }
        if !any {
            return false;
        }
        let root = uf.find(v);
        bits(explored).any(|u| uf.find(u) == root)
    }
}

pub fn canonize(g: &Graph) -> Canonization {
    let n = g.order();
    if n == 0 {
        return Canonization { labeling: vec![], form: CanonicalForm(*g), generators: vec![] };
    }
    let mut search = Search { g, first: None, best: None, generators: Vec::new(), path: Vec::new() };
    search.node(vec![g.vertex_mask()]);
    let best = search.best.expect("search visits at least one leaf");
    Canonization { labeling: best.labeling, form: CanonicalForm(best.graph), generators: search.generators }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonize(g).form
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

/// Deletion-vertex invariant used by augmentation: degree, then the sum of
/// neighbor degrees.
fn deletion_invariant(g: &Graph, v: usize) -> u32 {
    let d = g.degree(v) as u32;
    let s: u32 = bits(g.neighbors(v)).map(|w| g.degree(w) as u32).sum();
    d * 1024 + s
}

/// Children of canonical parent `p` whose canonical deletion vertex is the
/// appended one, one per isomorphism class.
fn children(p: &Graph) -> Vec<Graph> {
    let m = p.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for nbrs in 0..(1u32 << m) {
        let child = p.with_new_vertex(nbrs);
        let inv: Vec<u32> = (0..=m).map(|v| deletion_invariant(&child, v)).collect();
        let top = *inv.iter().max().expect("non-empty");
        if inv[m] != top {
            continue;
        }
        let c = canonize(&child);
        let pos = c.positions();
        let chosen = (0..=m)
            .filter(|&v| inv[v] == top)
            .max_by_key(|&v| pos[v])
            .expect("new vertex attains the maximum");
        if chosen != m {
            let orbits = c.orbits();
            if orbits[chosen] != orbits[m] {
                continue;
            }
        }
        if seen.insert(c.form) {
            out.push(c.form.into_graph());
        }
    }
    out
}

/// Optional enumeration filter. When `hereditary` is set the predicate is
/// assumed closed under vertex deletion, so failing graphs are not extended.
pub struct Filter<'a> {
    pub predicate: &'a (dyn Fn(&Graph) -> bool + Sync),
    pub hereditary: bool,
}

/// Canonical representatives of all graphs of each order `1..=max_order`,
/// grouped by order; each group sorted by size, then canonical key.
pub fn enumerate_by_order(max_order: usize, filter: Option<&Filter<'_>>, exec: Exec) -> Result<Vec<Vec<Graph>>> {
    if max_order > crate::graph::MAX_ORDER {
        return Err(Error::Capacity { requested: max_order, limit: crate::graph::MAX_ORDER });
    }
    let mut levels: Vec<Vec<Graph>> = Vec::with_capacity(max_order);
    // frontier holds the parents to extend; with a hereditary filter it is
    // already filtered
    let mut frontier = vec![Graph::empty(0)];
    for _order in 1..=max_order {
        let groups = par::map(exec, &frontier, children);
        let mut level: Vec<Graph> = groups.into_iter().flatten().collect();
        level.sort_unstable_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
        let kept: Vec<Graph> = match filter {
            Some(f) => {
                let keep = par::map(exec, &level, |g| (f.predicate)(g));
                level.iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| *g).collect()
            }
            None => level.clone(),
        };
        frontier = match filter {
            Some(f) if f.hereditary => kept.clone(),
            _ => level,
        };
        levels.push(kept);
    }
    Ok(levels)
}

/// All graphs of orders `1..=max_order`, in enumeration order.
pub fn enumerate_graphs(max_order: usize, filter: Option<&Filter<'_>>) -> Result<Vec<Graph>> {
    Ok(enumerate_by_order(max_order, filter, Exec::default())?.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn shuffled(g: &Graph, seed: u64) -> Graph {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (s >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        g.permuted(&perm)
    }

    #[test]
    fn invariant_under_relabeling() {
        for name in ["k33", "petersen", "k5_bar", "wagner_v8", "k33_dotcup_k2", "e6", "k7"] {
            let g = catalog::lookup(name).unwrap();
            for seed in 0..20 {
                assert_eq!(canonical_form(&g), canonical_form(&shuffled(&g, seed)), "{name}");
            }
        }
    }

    #[test]
    fn distinguishes() {
        let a = catalog::lookup("k5_sqcup_k2").unwrap();
        let b = catalog::lookup("k5_dotcup_k2").unwrap();
        assert_ne!(canonical_form(&a), canonical_form(&b));
        let k5bar = catalog::lookup("k5_bar").unwrap();
        assert_ne!(k5bar.degree_sequence(), b.degree_sequence());
        assert!(!are_isomorphic(&k5bar, &b));
        assert!(!are_isomorphic(&catalog::lookup("k33").unwrap(), &Graph::complete(5)));
    }

    #[test]
    fn petersen_outer_cycle_is_c5() {
        let p = catalog::lookup("petersen").unwrap();
        assert!(are_isomorphic(&p.induced(0b11111), &catalog::lookup("c5").unwrap()));
        assert!(are_isomorphic(&p.induced(0b1111100000), &catalog::lookup("c5").unwrap()));
    }

    #[test]
    fn k33_2e_is_the_balanced_split_of_k5() {
        let split = Graph::complete(5).split_vertex(0, 0b00110, 0b11000);
        assert_eq!(canonical_form(&split), canonical_form(&catalog::lookup("k33_plus_2e").unwrap()));
    }

    #[test]
    fn form_is_isomorphic_to_input() {
        let g = catalog::lookup("k33_bar").unwrap();
        let c = canonize(&g);
        let mut perm = vec![0usize; g.order()];
        for (i, &v) in c.labeling.iter().enumerate() {
            perm[v as usize] = i;
        }
        assert_eq!(g.permuted(&perm), *c.form.graph());
    }

    #[test]
    fn automorphism_group_orbits() {
        let c = canonize(&catalog::lookup("k5_dotcup_k2").unwrap());
        // orbits: {0}, {1,2,3,4}, {5}
        assert_eq!(c.orbits(), vec![0, 1, 1, 1, 1, 5]);
        let c = canonize(&catalog::lookup("petersen").unwrap());
        assert!(c.orbits().iter().all(|&o| o == 0));
    }

    #[test]
    fn small_counts() {
        let levels = enumerate_by_order(5, None, Exec::Sequential).unwrap();
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn hereditary_filter_prunes() {
        let forest = |g: &Graph| g.size() + g.components().len() == g.order();
        let f = Filter { predicate: &forest, hereditary: true };
        let levels = enumerate_by_order(6, Some(&f), Exec::Sequential).unwrap();
        // forests on n vertices: 1, 2, 3, 6, 10, 20
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 3, 6, 10, 20]);
    }
}
