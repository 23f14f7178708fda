//! Text formats: graph6 and a plain edge list.
//!
//! graph6 stores the order as one byte `n + 63` (orders up to 62), followed by
//! the upper triangle of the adjacency matrix read column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits per byte, most
//! significant bit first, each byte offset by 63. Unused trailing bits are zero.
//!
//! The edge list format is `n m` on the first line followed by `m` lines `u v`.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |m: &str| Error::Graph6(format!("{m} in {text:?}"));
    let first = *bytes.first().ok_or_else(|| bad("empty string"))?;
    if !(63..=126).contains(&first) {
        return Err(bad("invalid order byte"));
    }
    if first == 126 {
        return Err(Error::Capacity { requested: 63, limit: MAX_ORDER });
    }
    let n = (first - 63) as usize;
    if n > MAX_ORDER {
        return Err(Error::Capacity { requested: n, limit: MAX_ORDER });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let body = &bytes[1..];
    if body.len() != nbits.div_ceil(6) {
        return Err(bad("wrong length"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(bad("invalid data byte"));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                g = g.add_edge(Edge::new(i, j)?)?;
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = body[body.len() - 1];
        if !(63..=126).contains(&last) {
            return Err(bad("invalid data byte"));
        }
        let pad = 6 - nbits % 6;
        if (last - 63) & ((1 << pad) - 1) != 0 {
            return Err(bad("nonzero padding"));
        }
    }
    Ok(g)
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

/// Parse one or more edge-list blocks. Blank lines and `#` comments are skipped.
pub fn decode_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut nums = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace)
        .map(|t| t.parse::<usize>().map_err(|_| Error::EdgeList(format!("not a number: {t:?}"))));
    let mut out = Vec::new();
    while let Some(n) = nums.next() {
        let n = n?;
        let m = nums.next().ok_or_else(|| Error::EdgeList("missing edge count".into()))??;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let u = nums.next().ok_or_else(|| Error::EdgeList("truncated edge list".into()))??;
            let v = nums.next().ok_or_else(|| Error::EdgeList("truncated edge list".into()))??;
            if u >= n || v >= n {
                return Err(Error::EdgeList(format!("edge {u} {v} out of range for order {n}")));
            }
            edges.push((u, v));
        }
        out.push(Graph::from_edges(n, &edges)?);
    }
    Ok(out)
}

pub fn decode_edge_list(text: &str) -> Result<Graph> {
    let mut gs = decode_edge_lists(text)?;
    match gs.len() {
        1 => Ok(gs.pop().unwrap()),
        0 => Err(Error::EdgeList("no graph found".into())),
        k => Err(Error::EdgeList(format!("expected one graph, found {k}"))),
    }
}
