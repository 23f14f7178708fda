//! Planarity via the left-right criterion (de Fraysseix–Rosenstiehl, in
//! Brandes' formulation): a DFS orientation with lowpoints, then a second
//! DFS that maintains a stack of conflict pairs of return-edge intervals.
//! Only the yes/no answer is produced.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, MAX_ORDER};

const NONE: u16 = u16::MAX;
const UNSET: i32 = -1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Interval {
    low: u16,
    high: u16,
}

impl Interval {
    const EMPTY: Interval = Interval { low: NONE, high: NONE };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LeftRight<'a> {
    g: &'a Graph,
    n: usize,
    height: Vec<i32>,
    parent_edge: Vec<u16>,
    done: Vec<u32>,
    out: Vec<Vec<u16>>,
    lowpt: Vec<i32>,
    lowpt2: Vec<i32>,
    nesting: Vec<i32>,
    refs: Vec<u16>,
    lowpt_edge: Vec<u16>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

impl<'a> LeftRight<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        let ne = n * n;
        LeftRight {
            g,
            n,
            height: vec![UNSET; n],
            parent_edge: vec![NONE; n],
            done: vec![0; n],
            out: vec![Vec::new(); n],
            lowpt: vec![0; ne],
            lowpt2: vec![0; ne],
            nesting: vec![0; ne],
            refs: vec![NONE; ne],
            lowpt_edge: vec![NONE; ne],
            stack_bottom: vec![0; ne],
            stack: Vec::new(),
        }
    }

    #[inline]
    fn id(&self, v: usize, w: usize) -> u16 {
        (v * self.n + w) as u16
    }

    #[inline]
    fn source(&self, e: u16) -> usize {
        e as usize / self.n
    }

    #[inline]
    fn target(&self, e: u16) -> usize {
        e as usize % self.n
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for w in bits(self.g.neighbors(v)) {
            if self.done[v] & (1 << w) != 0 {
                continue;
            }
            self.done[v] |= 1 << w;
            self.done[w] |= 1 << v;
            let vw = self.id(v, w) as usize;
            self.out[v].push(vw as u16);
            self.lowpt[vw] = self.height[v];
            self.lowpt2[vw] = self.height[v];
            if self.height[w] == UNSET {
                self.parent_edge[w] = vw as u16;
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }
            self.nesting[vw] = 2 * self.lowpt[vw];
            if self.lowpt2[vw] < self.height[v] {
                self.nesting[vw] += 1;
            }
            if e != NONE {
                let e = e as usize;
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    #[inline]
    fn low(&self, e: u16) -> i32 {
        self.lowpt[e as usize]
    }

    fn conflicting(&self, i: Interval, b: u16) -> bool {
        !i.is_empty() && self.low(i.high) > self.low(b)
    }

    fn lowest(&self, p: &ConflictPair) -> i32 {
        if p.left.is_empty() {
            return self.low(p.right.low);
        }
        if p.right.is_empty() {
            return self.low(p.left.low);
        }
        self.low(p.left.low).min(self.low(p.right.low))
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let edges = std::mem::take(&mut self.out[v]);
        for (k, &ei) in edges.iter().enumerate() {
            let w = self.target(ei);
            self.stack_bottom[ei as usize] = self.stack.len();
            if ei == self.parent_edge[w] {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei as usize] = ei;
                self.stack.push(ConflictPair { left: Interval::EMPTY, right: Interval { low: ei, high: ei } });
            }
            if self.low(ei) < self.height[v] {
                if k == 0 {
                    if e != NONE {
                        self.lowpt_edge[e as usize] = self.lowpt_edge[ei as usize];
                    }
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            let u = self.source(e);
            self.trim_back_edges(u);
            if self.low(e) < self.height[u] {
                let top = *self.stack.last().expect("return edge implies a conflict pair");
                let (hl, hr) = (top.left.high, top.right.high);
                self.refs[e as usize] = if hl != NONE && (hr == NONE || self.low(hl) > self.low(hr)) { hl } else { hr };
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: u16, e: u16) -> bool {
        let mut p = ConflictPair { left: Interval::EMPTY, right: Interval::EMPTY };
        // merge return edges of ei into p.right
        loop {
            let mut q = self.stack.pop().expect("pair above stack bottom");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.low(q.right.low) > self.low(e) {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.refs[p.right.low as usize] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[q.right.low as usize] = self.lowpt_edge[e as usize];
            }
            if self.stack.len() == self.stack_bottom[ei as usize] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into p.left
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(top.left, ei) || self.conflicting(top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked non-empty");
            if self.conflicting(q.right, ei) {
                q.swap();
            }
            if self.conflicting(q.right, ei) {
                return false;
            }
            if p.right.low != NONE {
                self.refs[p.right.low as usize] = q.right.high;
            }
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.refs[p.left.low as usize] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn trim_back_edges(&mut self, u: usize) {
        let hu = self.height[u];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            self.stack.pop();
        }
        let Some(mut p) = self.stack.pop() else { return };
        while p.left.high != NONE && self.target(p.left.high) == u {
            p.left.high = self.refs[p.left.high as usize];
        }
        if p.left.high == NONE && p.left.low != NONE {
            self.refs[p.left.low as usize] = p.right.low;
            p.left.low = NONE;
        }
        while p.right.high != NONE && self.target(p.right.high) == u {
            p.right.high = self.refs[p.right.high as usize];
        }
        if p.right.high == NONE && p.right.low != NONE {
            self.refs[p.right.low as usize] = p.left.low;
            p.right.low = NONE;
        }
        self.stack.push(p);
    }

    fn run(mut self) -> bool {
        let mut roots = Vec::new();
        for v in 0..self.n {
            if self.height[v] == UNSET {
                self.height[v] = 0;
                roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..self.n {
            let nesting = &self.nesting;
            self.out[v].sort_by_key(|&e| nesting[e as usize]);
        }
        for r in roots {
            if !self.test(r) {
                return false;
            }
        }
        true
    }
}

pub fn is_planar(g: &Graph) -> bool {
    let (n, m) = (g.order(), g.size());
    // K3,3 is the smallest nonplanar graph by size
    if n <= 4 || m < 9 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    LeftRight::new(g).run()
}

/// Outerplanar iff adding a universal vertex leaves the graph planar.
pub fn is_outerplanar(g: &Graph) -> Result<bool> {
    if g.order() + 1 > MAX_ORDER {
        return Err(Error::Capacity { requested: g.order() + 1, limit: MAX_ORDER });
    }
    Ok(is_planar(&g.with_universal_vertex()?))
}
