//! Turning command-line graph and set arguments into graphs.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use minorkit::catalog;
use minorkit::formats::{decode_edge_list, decode_graph6};
use minorkit::miner::ObstructionReport;
use minorkit::Graph;

/// A catalog name, then a graph6 string, then a file holding an edge list
/// or a graph6 line.
pub fn graph(arg: &str) -> Result<Graph> {
    if let Ok(g) = catalog::lookup(arg) {
        return Ok(g);
    }
    if let Ok(g) = decode_graph6(arg.trim()) {
        return Ok(g);
    }
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        return graph_text(&text).with_context(|| format!("parsing {arg}"));
    }
    bail!("`{arg}` is not a catalog name, a graph6 string, or a readable file")
}

fn graph_text(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    if let Ok(g) = decode_graph6(trimmed) {
        return Ok(g);
    }
    Ok(decode_edge_list(trimmed)?)
}

/// A set name (`fig3`, `sap`, `kuratowski`), a comma list of graphs, or a
/// file: either a report JSON or one graph per line.
pub fn set(arg: &str) -> Result<Vec<(String, Graph)>> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        if let Ok(report) = serde_json::from_str::<ObstructionReport>(&text) {
            return report
                .obstructions
                .iter()
                .map(|e| Ok((e.g6.clone(), e.graph()?)))
                .collect();
        }
        return text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| Ok((l.to_string(), graph(l)?)))
            .collect();
    }
    if let Ok(named) = catalog::lookup_set(arg) {
        return Ok(named);
    }
    arg.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Ok((s.to_string(), graph(s)?)))
        .collect()
}
