//! Exact treewidth by dynamic programming over vertex subsets:
//! `TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|)`, where `Q(S, v)` is
//! the set of vertices outside `S + v` reachable from `v` through `S`.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Largest order the subset DP accepts.
pub const MAX_TW_ORDER: usize = 12;

fn frontier(g: &Graph, inside: u32, v: usize) -> u32 {
    let within = inside | (1 << v);
    let comp = g.reach(v, within);
    let nb = bits(comp).fold(0u32, |acc, w| acc | g.neighbors(w));
    nb & !within
}

/// Exact treewidth; `-1` for the empty graph.
pub fn treewidth(g: &Graph) -> Result<i32> {
    let n = g.order();
    if n > MAX_TW_ORDER {
        return Err(Error::Capacity { requested: n, limit: MAX_TW_ORDER });
    }
    let full = 1usize << n;
    let mut dp = vec![i32::MAX; full];
    dp[0] = -1;
    for s in 1..full {
        let set = s as u32;
        let mut best = i32::MAX;
        for v in bits(set) {
            let rest = set & !(1 << v);
            let q = frontier(g, rest, v).count_ones() as i32;
            best = best.min(dp[rest as usize].max(q));
        }
        dp[s] = best;
    }
    Ok(dp[full - 1])
}

fn is_forest(g: &Graph) -> bool {
    g.size() + g.components().len() == g.order()
}

pub fn treewidth_le(g: &Graph, k: u32) -> Result<bool> {
    let n = g.order();
    if n <= k as usize + 1 {
        return Ok(true);
    }
    match k {
        0 => return Ok(g.size() == 0),
        1 => return Ok(is_forest(g)),
        _ => {}
    }
    // treewidth <= k forces at most k*n - k(k+1)/2 edges
    let k = k as usize;
    if g.size() > k * n - k * (k + 1) / 2 {
        return Ok(false);
    }
    Ok(treewidth(g)? <= k as i32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::lookup;

    /// Minimum over all elimination orderings of the largest degree at
    /// elimination time.
    fn brute_force(g: &Graph) -> i32 {
        let n = g.order();
        if n == 0 {
            return -1;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = i32::MAX;
        loop {
            let mut adj: Vec<u32> = (0..n).map(|v| g.neighbors(v)).collect();
            let mut alive = g.vertex_mask();
            let mut width = 0;
            for &v in &perm {
                let nb = adj[v] & alive & !(1 << v);
                width = width.max(nb.count_ones() as i32);
                for a in bits(nb) {
                    adj[a] |= nb & !(1 << a);
                }
                alive &= !(1 << v);
            }
            best = best.min(width);
            // next permutation
            let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        best
    }

    #[test]
    fn known_values() {
        assert!(treewidth_le(&lookup("p6").unwrap(), 1).unwrap());
        let forest = lookup("p3").unwrap().disjoint_union(&lookup("k2").unwrap()).unwrap();
        assert!(treewidth_le(&forest, 1).unwrap());
        let k4 = lookup("k4").unwrap();
        assert!(!treewidth_le(&k4, 2).unwrap());
        assert!(treewidth_le(&k4, 3).unwrap());
        let c4 = lookup("c4").unwrap();
        assert!(!treewidth_le(&c4, 1).unwrap());
        assert!(treewidth_le(&c4, 2).unwrap());
        assert_eq!(brute_force(&c4), 2);
        assert_eq!(treewidth(&lookup("k5").unwrap()).unwrap(), 4);
        assert_eq!(treewidth(&lookup("octahedron").unwrap()).unwrap(), 4);
        assert_eq!(treewidth(&lookup("wagner_v8").unwrap()).unwrap(), 4);
        assert_eq!(treewidth(&lookup("petersen").unwrap()).unwrap(), 4);
        assert_eq!(treewidth(&Graph::empty(0)).unwrap(), -1);
        assert_eq!(treewidth(&Graph::empty(3)).unwrap(), 0);
        assert!(matches!(treewidth(&Graph::empty(13)), Err(Error::Capacity { .. })));
        assert!(treewidth_le(&Graph::complete(20), 19).unwrap());
    }

    #[test]
    fn matches_elimination_orderings() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(7);
        for trial in 0..60 {
            let n = 3 + trial % 5;
            let mut g = Graph::empty(n);
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(0.45) {
                        g = g.add_edge(crate::Edge::new(a, b).unwrap()).unwrap();
                    }
                }
            }
            let want = brute_force(&g);
            assert_eq!(treewidth(&g).unwrap(), want, "{g:?}");
            for k in 0..5u32 {
                assert_eq!(treewidth_le(&g, k).unwrap(), want <= k as i32, "{g:?} k={k}");
            }
        }
    }
}
