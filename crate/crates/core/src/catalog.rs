//! Named graphs: the Kuratowski graphs, the seven strongly-almost-planar
//! obstructions, a few classic graphs, and parametric families
//! (`k<n>`, `c<n>`, `p<n>`, `e<n>`, `k<a>_<b>`).

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: Graph,
    pub description: &'static str,
    pub anchor: &'static str,
}

fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::with_capacity(a * b);
    for i in 0..a {
        for j in a..a + b {
            edges.push((i, j));
        }
    }
    Graph::from_edges(a + b, &edges).expect("bipartite within capacity")
}

fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("cycle within capacity")
}

fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("path within capacity")
}

fn edge(a: usize, b: usize) -> Edge {
    Edge::new(a, b).expect("distinct endpoints")
}

/// The split edge of the `k5_bar` and `k33_bar` entries.
pub fn split_edge(name: &str) -> Option<Edge> {
    match name {
        "k5_bar" => Some(edge(0, 5)),
        "k33_bar" => Some(edge(0, 6)),
        _ => None,
    }
}

fn build_fixed(name: &str) -> Option<Graph> {
    let k2 = Graph::complete(2);
    let k5 = Graph::complete(5);
    let k33 = complete_bipartite(3, 3);
    let g = match name {
        "k5" => k5,
        "k33" => k33,
        "k23" => complete_bipartite(2, 3),
        "k4" => Graph::complete(4),
        "k3" => Graph::complete(3),
        "2k2" => k2.disjoint_union(&k2).ok()?,
        "petersen" => Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .ok()?,
        "octahedron" | "k222" => {
            let mut g = Graph::complete(6);
            for i in [0, 2, 4] {
                g = g.delete_edge(edge(i, i + 1)).ok()?;
            }
            g
        }
        "wagner_v8" => {
            let mut g = cycle(8);
            for i in 0..4 {
                g = g.add_edge(edge(i, i + 4)).ok()?;
            }
            g
        }
        "pentagonal_prism" => {
            let mut g = cycle(5).disjoint_union(&cycle(5)).ok()?;
            for i in 0..5 {
                g = g.add_edge(edge(i, i + 5)).ok()?;
            }
            g
        }
        "k33_plus_e" => k33.add_edge(edge(0, 1)).ok()?,
        "k33_plus_2e" => k33.add_edge(edge(0, 1)).ok()?.add_edge(edge(3, 4)).ok()?,
        "k5_sqcup_k2" => k5.disjoint_union(&k2).ok()?,
        "k33_sqcup_k2" => k33.disjoint_union(&k2).ok()?,
        "k5_dotcup_k2" => k5.one_point_union(0, &k2, 0).ok()?,
        "k33_dotcup_k2" => k33.one_point_union(0, &k2, 0).ok()?,
        // vertex 0 split into a = 0 (keeps one neighbor) and b = 5 (the rest)
        "k5_bar" => k5.split_vertex(0, 0b00010, 0b11100),
        "k33_bar" => k33.split_vertex(0, 0b001000, 0b110000),
        _ => return None,
    };
    Some(g)
}

const FIXED: &[(&str, &str, &str)] = &[
    ("k5", "complete graph on five vertices", "Kuratowski graph"),
    ("k33", "complete bipartite graph K3,3, parts {0,1,2} and {3,4,5}", "Kuratowski graph"),
    ("k23", "complete bipartite graph K2,3", "outerplanar obstruction"),
    ("k4", "complete graph on four vertices", "treewidth-2 obstruction"),
    ("k3", "triangle", "forest obstruction"),
    ("2k2", "two disjoint edges", "apex edge-free obstruction"),
    ("petersen", "Petersen graph", "classic"),
    ("octahedron", "octahedron K2,2,2", "treewidth-3 obstruction"),
    ("wagner_v8", "Wagner graph V8 (Moebius ladder on 8 vertices)", "treewidth-3 obstruction"),
    ("pentagonal_prism", "pentagonal prism C5 x K2", "treewidth-3 obstruction"),
    ("k33_plus_e", "K3,3 with one edge inside a part", "SAP obstruction"),
    ("k33_plus_2e", "K3,3 with one edge inside each part; the (2,2) split of K5", "not SAP, not minimal"),
    ("k5_sqcup_k2", "disjoint union of K5 and K2", "SAP obstruction"),
    ("k33_sqcup_k2", "disjoint union of K3,3 and K2", "SAP obstruction"),
    ("k5_dotcup_k2", "K5 with a pendant edge at vertex 0", "SAP obstruction"),
    ("k33_dotcup_k2", "K3,3 with a pendant edge at vertex 0", "SAP obstruction"),
    ("k5_bar", "K5 with vertex 0 split; the new vertex 0 keeps one old neighbor; split edge 0-5", "SAP obstruction"),
    ("k33_bar", "K3,3 with vertex 0 split; the new vertex 0 keeps one old neighbor; split edge 0-6", "SAP obstruction"),
];

/// The seven minor-minimal graphs that are not strongly almost-planar.
pub const SAP_OBSTRUCTIONS: [&str; 7] = [
    "k5_sqcup_k2",
    "k33_sqcup_k2",
    "k5_dotcup_k2",
    "k33_dotcup_k2",
    "k5_bar",
    "k33_bar",
    "k33_plus_e",
];

pub fn entries() -> Vec<CatalogEntry> {
    FIXED
        .iter()
        .map(|&(name, description, anchor)| CatalogEntry {
            name,
            graph: build_fixed(name).expect("fixed catalog entries build"),
            description,
            anchor,
        })
        .collect()
}

/// Name of the fixed catalog entry isomorphic to `g`, if any.
pub fn identify(g: &Graph) -> Option<&'static str> {
    FIXED
        .iter()
        .map(|&(name, ..)| name)
        .find(|name| build_fixed(name).is_some_and(|h| crate::canon::are_isomorphic(g, &h)))
}

fn parse_family(name: &str) -> Option<Result<Graph>> {
    let num = |s: &str| s.parse::<usize>().ok();
    let cap = |n: usize| if n > crate::graph::MAX_ORDER { Err(Error::Capacity { requested: n, limit: crate::graph::MAX_ORDER }) } else { Ok(n) };
    if let Some(rest) = name.strip_prefix('k') {
        if let Some((a, b)) = rest.split_once('_') {
            let (a, b) = (num(a)?, num(b)?);
            return Some(cap(a + b).map(|_| complete_bipartite(a, b)));
        }
        let n = num(rest)?;
        return Some(cap(n).map(Graph::complete));
    }
    if let Some(rest) = name.strip_prefix('c') {
        let n = num(rest)?;
        if n < 3 {
            return Some(Err(Error::UnknownGraph(name.to_string())));
        }
        return Some(cap(n).map(cycle));
    }
    if let Some(rest) = name.strip_prefix('p') {
        let n = num(rest)?;
        return Some(cap(n).map(path));
    }
    if let Some(rest) = name.strip_prefix('e') {
        let n = num(rest)?;
        return Some(cap(n).map(Graph::empty));
    }
    None
}

pub fn lookup(name: &str) -> Result<Graph> {
    let key = name.trim().to_ascii_lowercase();
    if let Some(g) = build_fixed(&key) {
        return Ok(g);
    }
    parse_family(&key).unwrap_or_else(|| Err(Error::UnknownGraph(name.to_string())))
}

/// Resolve a named set of graphs, or a comma-separated list of names.
pub fn lookup_set(spec: &str) -> Result<Vec<(String, Graph)>> {
    let names: Vec<String> = match spec.trim() {
        "fig3" | "sap" | "sap_obstructions" => SAP_OBSTRUCTIONS.iter().map(|s| s.to_string()).collect(),
        "kuratowski" => vec!["k5".into(), "k33".into()],
        other => other.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
    };
    names.into_iter().map(|n| lookup(&n).map(|g| (n, g))).collect()
}
