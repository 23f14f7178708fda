//! Reference implementations used as test oracles. They share no code with
//! the library's canonical labeling or minor search.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use minorkit::{Edge, Graph};

/// Position of pair `(i, j)`, `i < j`, in the `n`-vertex edge bit string.
fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

fn graph_from_bits(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> pair_index(i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn bits_of(g: &Graph) -> u64 {
    let mut code = 0u64;
    for e in g.edges() {
        code |= 1 << pair_index(e.u(), e.v());
    }
    code
}

/// Apply the transposition of `a` and `a + 1` to an edge bit string.
fn swap_adjacent(n: usize, code: u64, a: usize) -> u64 {
    let map = |v: usize| if v == a { a + 1 } else if v == a + 1 { a } else { v };
    let mut out = 0u64;
    for j in 1..n {
        for i in 0..j {
            if code >> pair_index(i, j) & 1 == 1 {
                let (x, y) = (map(i), map(j));
                let (x, y) = if x < y { (x, y) } else { (y, x) };
                out |= 1 << pair_index(x, y);
            }
        }
    }
    out
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let p = parent[x as usize];
        parent[x as usize] = parent[p as usize];
        x = p;
    }
    x
}

/// Isomorphism classes of labeled graphs on `n` vertices, found by merging
/// every labeled graph with its images under adjacent transpositions (which
/// generate the symmetric group). Returns a class id for each edge bit
/// string.
pub struct LabeledClasses {
    pub n: usize,
    parent: Vec<u32>,
}

impl LabeledClasses {
    pub fn new(n: usize) -> Self {
        assert!(n <= 7);
        let total = 1usize << (n * n.saturating_sub(1) / 2);
        let mut parent: Vec<u32> = (0..total as u32).collect();
        for code in 0..total as u64 {
            for a in 0..n.saturating_sub(1) {
                let other = swap_adjacent(n, code, a);
                let (x, y) = (find(&mut parent, code as u32), find(&mut parent, other as u32));
                if x != y {
                    parent[x.max(y) as usize] = x.min(y);
                }
            }
        }
        LabeledClasses { n, parent }
    }

    pub fn count(&mut self) -> usize {
        (0..self.parent.len() as u32).filter(|&x| find(&mut self.parent, x) == x).count()
    }

    pub fn class_of(&mut self, g: &Graph) -> u32 {
        assert_eq!(g.order(), self.n);
        find(&mut self.parent, bits_of(g) as u32)
    }

    pub fn labeled(&self, code: u64) -> Graph {
        graph_from_bits(self.n, code)
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for k in (1..=n.min(max)).rev() {
        cur.push(k);
        partitions(n - k, k, cur, out);
        cur.pop();
    }
}

/// Number of unlabeled graphs on `n` vertices by Burnside's lemma over the
/// cycle types of the symmetric group acting on vertex pairs.
pub fn burnside_count(n: usize) -> u128 {
    let mut types = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut types);
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let mut total: u128 = 0;
    for cycles in types {
        // permutations with this cycle type: n! / prod(k^m_k m_k!)
        let mut denom: u128 = 1;
        let mut k = 0;
        while k < cycles.len() {
            let len = cycles[k];
            let m = cycles.iter().filter(|&&c| c == len).count();
            denom *= (len as u128).pow(m as u32) * fact(m);
            k += m;
        }
        let perms = fact(n) / denom;
        let mut orbits = 0;
        for (i, &a) in cycles.iter().enumerate() {
            orbits += a / 2;
            for &b in &cycles[i + 1..] {
                orbits += gcd(a, b);
            }
        }
        total += perms << orbits;
    }
    total / fact(n)
}

/// Brute-force canonical key: the lexicographically smallest edge bit
/// string over all relabelings.
pub fn brute_canonical_key(g: &Graph) -> u64 {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let edges: Vec<(usize, usize)> = g.edges().map(|e| e.endpoints()).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        for &(a, b) in &edges {
            let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
            code |= 1 << pair_index(x, y);
        }
        best = best.min(code);
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    best
}

/// Every minor of `g` (itself included, the null graph excluded) up to
/// isomorphism, as brute-force keys tagged by order, by breadth-first search
/// over single deletions and contractions.
pub fn minor_closure(g: &Graph) -> BTreeSet<(usize, u64)> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert((g.order(), brute_canonical_key(g)));
    queue.push_back(*g);
    while let Some(h) = queue.pop_front() {
        let mut next = Vec::new();
        if h.order() > 1 {
            for v in 0..h.order() {
                next.push(h.delete_vertex(v).unwrap());
            }
        }
        let edges: Vec<Edge> = h.edges().collect();
        for &e in &edges {
            next.push(h.delete_edge(e).unwrap());
            next.push(h.contract_edge(e).unwrap());
        }
        for m in next {
            if seen.insert((m.order(), brute_canonical_key(&m))) {
                queue.push_back(m);
            }
        }
    }
    seen
}
