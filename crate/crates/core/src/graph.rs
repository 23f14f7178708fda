//! Simple undirected graphs on at most [`MAX_ORDER`] vertices, stored as
//! one adjacency bitmask per vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order. Adjacency rows are `u32` bitmasks.
pub const MAX_ORDER: usize = 32;

/// An unordered pair of distinct vertices, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: u8,
    v: u8,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::Loop(a));
        }
        if a >= MAX_ORDER || b >= MAX_ORDER {
            return Err(Error::VertexOutOfRange { vertex: a.max(b), order: MAX_ORDER });
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        Ok(Edge { u: u as u8, v: v as u8 })
    }

    #[inline]
    pub fn u(self) -> usize {
        self.u as usize
    }

    #[inline]
    pub fn v(self) -> usize {
        self.v as usize
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u(), self.v())
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A simple undirected graph with vertices `0..order`.
///
/// Rows at or beyond `order` are always zero, so derived equality, hashing
/// and ordering compare labeled graphs exactly.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_ORDER],
}

impl Default for Graph {
    fn default() -> Self {
        Graph::empty(0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

#[inline]
pub(crate) fn mask_below(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterate over set bits of a mask, lowest first.
#[inline]
pub(crate) fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

impl Graph {
    /// Edgeless graph on `n` vertices. Panics if `n > MAX_ORDER`.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph { n: n as u8, adj: [0; MAX_ORDER] }
    }

    pub fn try_empty(n: usize) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::Capacity { requested: n, limit: MAX_ORDER });
        }
        Ok(Graph::empty(n))
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        let all = mask_below(n);
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::try_empty(n)?;
        for &(a, b) in edges {
            g = g.add_edge(Edge::new(a, b)?)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn size(&self) -> usize {
        self.adj[..self.order()].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub(crate) fn rows(&self) -> &[u32] {
        &self.adj[..self.order()]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order() && b < self.order() && self.adj[a] & (1 << b) != 0
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.has_edge(e.u(), e.v())
    }

    pub fn vertex_mask(&self) -> u32 {
        mask_below(self.order())
    }

    /// Edges in lexicographic order of `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.order()).flat_map(move |u| {
            bits(self.adj[u] & !mask_below(u + 1)).map(move |v| Edge { u: u as u8, v: v as u8 })
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn isolated_vertices(&self) -> usize {
        self.rows().iter().filter(|r| **r == 0).count()
    }

    /// Check the representation invariants: symmetric, loop-free, and no
    /// bits outside the vertex range.
    pub fn is_valid(&self) -> bool {
        let n = self.order();
        (0..MAX_ORDER).all(|v| {
            let row = self.adj[v];
            if v >= n {
                return row == 0;
            }
            row & !mask_below(n) == 0
                && row & (1 << v) == 0
                && bits(row).all(|w| self.adj[w] & (1 << v) != 0)
        })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        } else {
            Ok(())
        }
    }

    fn check_edge(&self, e: Edge) -> Result<()> {
        self.check_vertex(e.v())?;
        if !self.contains(e) {
            return Err(Error::MissingEdge(e));
        }
        Ok(())
    }

    pub fn add_edge(&self, e: Edge) -> Result<Graph> {
        self.check_vertex(e.v())?;
        if self.contains(e) {
            return Err(Error::DuplicateEdge(e));
        }
        let mut g = *self;
        g.adj[e.u()] |= 1 << e.v();
        g.adj[e.v()] |= 1 << e.u();
        Ok(g)
    }

    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        self.check_edge(e)?;
        Ok(self.without_edge(e.u(), e.v()))
    }

    #[inline]
    pub(crate) fn without_edge(&self, a: usize, b: usize) -> Graph {
        let mut g = *self;
        g.adj[a] &= !(1 << b);
        g.adj[b] &= !(1 << a);
        g
    }

    /// Remove `v`; vertices above it shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.without_vertex(v))
    }

    pub(crate) fn without_vertex(&self, v: usize) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n - 1);
        for w in 0..n {
            if w == v {
                continue;
            }
            let dst = if w > v { w - 1 } else { w };
            g.adj[dst] = squeeze(self.adj[w], v);
        }
        g
    }

    /// Contract `e = ab` into the smaller endpoint; the larger id is removed
    /// and later ids shift down. Parallel edges collapse.
    pub fn contract_edge(&self, e: Edge) -> Result<Graph> {
        self.check_edge(e)?;
        Ok(self.contracted(e.u(), e.v()))
    }

    pub(crate) fn contracted(&self, a: usize, b: usize) -> Graph {
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        let mut h = *self;
        let merged = (h.adj[keep] | h.adj[drop]) & !(1 << keep) & !(1 << drop);
        for w in bits(h.adj[drop]) {
            h.adj[w] &= !(1 << drop);
        }
        for w in bits(merged) {
            h.adj[w] |= 1 << keep;
        }
        h.adj[keep] = merged;
        h.adj[drop] = 0;
        h.without_vertex(drop)
    }

    /// Induced subgraph on the vertices in `mask`, relabeled in increasing order.
    pub fn induced(&self, mask: u32) -> Graph {
        let mask = mask & self.vertex_mask();
        let mut g = Graph::empty(mask.count_ones() as usize);
        for (i, v) in bits(mask).enumerate() {
            g.adj[i] = compress(self.adj[v] & mask, mask);
        }
        g
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        debug_assert_eq!(perm.len(), n);
        let mut g = Graph::empty(n);
        for v in 0..n {
            let mut row = 0u32;
            for w in bits(self.adj[v]) {
                row |= 1 << perm[w];
            }
            g.adj[perm[v]] = row;
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let (n1, n2) = (self.order(), other.order());
        if n1 + n2 > MAX_ORDER {
            return Err(Error::Capacity { requested: n1 + n2, limit: MAX_ORDER });
        }
        let mut g = *self;
        g.n = (n1 + n2) as u8;
        for v in 0..n2 {
            g.adj[n1 + v] = other.adj[v] << n1;
        }
        Ok(g)
    }

    /// Glue `other` onto `self` by identifying `v1` in `self` with `v2` in
    /// `other`. The vertices of `other` other than `v2` follow those of `self`.
    pub fn one_point_union(&self, v1: usize, other: &Graph, v2: usize) -> Result<Graph> {
        self.check_vertex(v1)?;
        other.check_vertex(v2)?;
        let (n1, n2) = (self.order(), other.order());
        if n1 + n2 - 1 > MAX_ORDER {
            return Err(Error::Capacity { requested: n1 + n2 - 1, limit: MAX_ORDER });
        }
        // other's vertex w maps to v1 if w == v2, else n1 + (w shifted past v2)
        let map = |w: usize| -> usize {
            if w == v2 {
                v1
            } else if w > v2 {
                n1 + w - 1
            } else {
                n1 + w
            }
        };
        let mut g = *self;
        g.n = (n1 + n2 - 1) as u8;
        for (a, b) in other.edges().map(Edge::endpoints) {
            let (x, y) = (map(a), map(b));
            g.adj[x] |= 1 << y;
            g.adj[y] |= 1 << x;
        }
        Ok(g)
    }

    /// Add a vertex adjacent to every existing vertex.
    pub fn with_universal_vertex(&self) -> Result<Graph> {
        let n = self.order();
        if n + 1 > MAX_ORDER {
            return Err(Error::Capacity { requested: n + 1, limit: MAX_ORDER });
        }
        let mut g = *self;
        g.n += 1;
        g.adj[n] = mask_below(n);
        for v in 0..n {
            g.adj[v] |= 1 << n;
        }
        Ok(g)
    }

    /// Append a vertex with the given neighborhood (a mask over `0..order`).
    pub(crate) fn with_new_vertex(&self, nbrs: u32) -> Graph {
        let n = self.order();
        debug_assert!(n < MAX_ORDER);
        let mut g = *self;
        g.n += 1;
        g.adj[n] = nbrs;
        for w in bits(nbrs) {
            g.adj[w] |= 1 << n;
        }
        g
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: u32) -> u32 {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    pub fn components(&self) -> Vec<u32> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach(left.trailing_zeros() as usize, left);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// All splits of `v` under the given mode, deduplicated up to
    /// isomorphism. In each result the new pair is `a = v` and
    /// `b = order` (the appended vertex), joined by an edge.
    pub fn vertex_splits_with(&self, v: usize, mode: SplitMode) -> Result<Vec<Graph>> {
        self.check_vertex(v)?;
        if self.order() + 1 > MAX_ORDER {
            return Err(Error::Capacity { requested: self.order() + 1, limit: MAX_ORDER });
        }
        let nbrs: Vec<usize> = bits(self.adj[v]).collect();
        let d = nbrs.len();
        let choices: usize = match mode {
            SplitMode::Partition => 2,
            SplitMode::Cover => 3,
        };
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        let total = choices.pow(d as u32);
        for code in 0..total {
            // digit 0: a only, 1: b only, 2: both
            let (mut a_side, mut b_side) = (0u32, 0u32);
            let mut c = code;
            for &w in &nbrs {
                match c % choices {
                    0 => a_side |= 1 << w,
                    1 => b_side |= 1 << w,
                    _ => {
                        a_side |= 1 << w;
                        b_side |= 1 << w;
                    }
                }
                c /= choices;
            }
            let g = self.split_vertex(v, a_side, b_side);
            if seen.insert(crate::canon::canonical_form(&g)) {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// Full cover splits of `v`: each neighbor goes to `a`, `b`, or both.
    pub fn vertex_splits(&self, v: usize) -> Result<Vec<Graph>> {
        self.vertex_splits_with(v, SplitMode::Cover)
    }

    pub(crate) fn split_vertex(&self, v: usize, a_side: u32, b_side: u32) -> Graph {
        let n = self.order();
        let mut g = *self;
        for w in bits(self.adj[v]) {
            g.adj[w] &= !(1 << v);
        }
        g.adj[v] = 0;
        let mut g = g.with_new_vertex(b_side);
        g.adj[v] = a_side | (1 << n);
        g.adj[n] |= 1 << v;
        for w in bits(a_side) {
            g.adj[w] |= 1 << v;
        }
        g
    }
}

/// How neighbors of a split vertex may be distributed over the new pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitMode {
    /// Each neighbor goes to exactly one of the two new vertices.
    Partition,
    /// Each neighbor goes to one or both of the new vertices.
    Cover,
}

/// Drop bit `v` from `row`, shifting higher bits down.
#[inline]
fn squeeze(row: u32, v: usize) -> u32 {
    let low = row & mask_below(v);
    let high = if v >= 31 { 0 } else { (row >> (v + 1)) << v };
    low | high
}

/// Pack the bits of `row` selected by `mask` into the low bits.
#[inline]
fn compress(row: u32, mask: u32) -> u32 {
    let mut out = 0;
    for (i, v) in bits(mask).enumerate() {
        if row & (1 << v) != 0 {
            out |= 1 << i;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::catalog;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn delete_vertex_of_triangle() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.delete_vertex(0).unwrap(), Graph::complete(2));
        assert!(k3.delete_vertex(3).is_err());
    }

    #[test]
    fn delete_vertex_shifts_labels() {
        let p = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let g = p.delete_vertex(1).unwrap();
        assert_eq!(g, Graph::from_edges(3, &[(1, 2)]).unwrap());
    }

    #[test]
    fn delete_vertex_from_k5_sqcup_k2() {
        let g = catalog::lookup("k5_sqcup_k2").unwrap();
        let h = g.delete_vertex(6).unwrap();
        let expect = Graph::complete(5).disjoint_union(&Graph::empty(1)).unwrap();
        assert_eq!(h, expect);
    }

    #[test]
    fn petersen_minus_vertex() {
        let p = catalog::lookup("petersen").unwrap();
        for v in 0..10 {
            let h = p.delete_vertex(v).unwrap();
            assert_eq!((h.order(), h.size()), (9, 12));
        }
    }

    #[test]
    fn delete_edge_cases() {
        let k2 = Graph::complete(2);
        assert_eq!(k2.delete_edge(e(0, 1)).unwrap(), Graph::empty(2));
        assert!(matches!(Graph::empty(2).delete_edge(e(0, 1)), Err(Error::MissingEdge(_))));
        let k33e = catalog::lookup("k33_plus_e").unwrap();
        assert_eq!(k33e.delete_edge(e(0, 1)).unwrap(), catalog::lookup("k33").unwrap());
    }

    #[test]
    fn contract_small_graphs() {
        let k3 = Graph::complete(3);
        for ed in k3.edges() {
            assert_eq!(k3.contract_edge(ed).unwrap(), Graph::complete(2));
        }
        let c4 = catalog::lookup("c4").unwrap();
        for ed in c4.edges() {
            assert_eq!(c4.contract_edge(ed).unwrap(), Graph::complete(3));
        }
        assert!(k3.delete_edge(e(0, 1)).unwrap().contract_edge(e(0, 1)).is_err());
    }

    #[test]
    fn contract_merges_into_smaller_id() {
        // path 0-1-2-3, contract 1-2 gives path 0-1-2
        let p = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p.contract_edge(e(1, 2)).unwrap(), Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn k5_bar_contracts_to_k5() {
        let g = catalog::lookup("k5_bar").unwrap();
        assert_eq!((g.order(), g.size()), (6, 11));
        let k5 = g.contract_edge(catalog::split_edge("k5_bar").unwrap()).unwrap();
        assert!(are_isomorphic(&k5, &Graph::complete(5)));
    }

    #[test]
    fn splits_of_k5_and_k33() {
        let k5 = Graph::complete(5);
        let parts = k5.vertex_splits_with(0, SplitMode::Partition).unwrap();
        assert_eq!(parts.len(), 3);
        let k33_2e = catalog::lookup("k33_plus_2e").unwrap();
        assert!(parts.iter().any(|s| are_isomorphic(s, &k33_2e)));
        assert!(parts.iter().any(|s| are_isomorphic(s, &catalog::lookup("k5_bar").unwrap())));
        assert!(parts.iter().any(|s| are_isomorphic(s, &catalog::lookup("k5_dotcup_k2").unwrap())));

        let k33 = catalog::lookup("k33").unwrap();
        assert_eq!(k33.vertex_splits_with(0, SplitMode::Partition).unwrap().len(), 2);
    }

    #[test]
    fn cover_splits_of_k5() {
        // (a-only, b-only, both) counts up to swapping a and b:
        // z=0: 3, z=1: 2, z=2: 2, z=3: 1, z=4: 1
        let splits = Graph::complete(5).vertex_splits(2).unwrap();
        assert_eq!(splits.len(), 9);
        for s in &splits {
            let back = s.contract_edge(e(2, 5)).unwrap();
            assert!(are_isomorphic(&back, &Graph::complete(5)));
        }
    }

    #[test]
    fn split_of_isolated_vertex() {
        let splits = Graph::empty(1).vertex_splits(0).unwrap();
        assert_eq!(splits, vec![Graph::complete(2)]);
    }

    #[test]
    fn unions() {
        let k5 = Graph::complete(5);
        let k2 = Graph::complete(2);
        let k33 = catalog::lookup("k33").unwrap();
        let g = k5.disjoint_union(&k2).unwrap();
        assert_eq!((g.order(), g.size()), (7, 11));
        let g = k33.disjoint_union(&k2).unwrap();
        assert_eq!((g.order(), g.size()), (8, 10));
        assert_eq!(k33.disjoint_union(&Graph::empty(0)).unwrap(), k33);
        let g = k5.one_point_union(0, &k2, 0).unwrap();
        assert_eq!((g.order(), g.size()), (6, 11));
        let g = k33.one_point_union(0, &k2, 0).unwrap();
        assert_eq!((g.order(), g.size()), (7, 10));
        let p3 = k2.one_point_union(1, &k2, 0).unwrap();
        assert_eq!(p3, Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
        assert!(matches!(
            Graph::complete(20).disjoint_union(&Graph::complete(13)),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn add_edge_cases() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.add_edge(e(0, 2)).unwrap(), Graph::complete(3));
        assert!(matches!(p3.add_edge(e(0, 1)), Err(Error::DuplicateEdge(_))));
        assert!(matches!(Edge::new(1, 1), Err(Error::Loop(1))));
        let k33 = catalog::lookup("k33").unwrap();
        let one = k33.add_edge(e(0, 1)).unwrap();
        assert_eq!(one, catalog::lookup("k33_plus_e").unwrap());
        assert_eq!(one.add_edge(e(3, 4)).unwrap(), catalog::lookup("k33_plus_2e").unwrap());
    }

    #[test]
    fn induced_and_components() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(2)).unwrap();
        assert_eq!(g.components(), vec![0b00111, 0b11000]);
        assert_eq!(g.induced(0b11010), Graph::from_edges(3, &[(1, 2)]).unwrap());
        assert!(!g.is_connected());
    }

    #[test]
    fn squeeze_top_bit() {
        assert_eq!(squeeze(1 << 31 | 1, 31), 1);
        assert_eq!(squeeze(0b1011, 1), 0b101);
    }
}
