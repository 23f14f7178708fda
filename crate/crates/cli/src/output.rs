//! Report files and the per-directory manifest.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use minorkit::property::Prop;
use serde::{Deserialize, Serialize};

use crate::OutArgs;

const MANIFEST: &str = "manifest.json";

#[derive(Debug, Default, Serialize, Deserialize)]
struct Manifest {
    schema_version: u32,
    entries: Vec<ManifestEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ManifestEntry {
    file: String,
    command: String,
    minimality_target: String,
    bound: usize,
    count: usize,
}

impl OutArgs {
    pub fn report_path(&self, stem: &str) -> PathBuf {
        self.out.clone().unwrap_or_else(|| self.out_dir.join(format!("{stem}.json")))
    }
}

/// File-name friendly form of a property.
pub fn slug(p: &Prop) -> String {
    let mut out = String::new();
    for c in p.to_string().chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c);
        } else if !out.ends_with('_') {
            out.push('_');
        }
    }
    out.trim_matches('_').to_string()
}

pub fn write(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// Add or replace the manifest entry for `path` in its directory.
pub fn record(path: &Path, command: &str, minimality_target: &str, bound: usize, count: usize) -> Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let manifest_path = dir.join(MANIFEST);
    let mut manifest = match fs::read_to_string(&manifest_path) {
        Ok(text) => serde_json::from_str(&text).with_context(|| format!("parsing {}", manifest_path.display()))?,
        Err(_) => Manifest { schema_version: 1, entries: Vec::new() },
    };
    let file = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
    manifest.entries.retain(|e| e.file != file);
    manifest.entries.push(ManifestEntry {
        file,
        command: command.to_string(),
        minimality_target: minimality_target.to_string(),
        bound,
        count,
    });
    manifest.entries.sort_by(|a, b| a.file.cmp(&b.file));
    write(&manifest_path, &serde_json::to_string_pretty(&manifest)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use minorkit::property::parse_property;

    #[test]
    fn slugs() {
        assert_eq!(slug(&parse_property("not sap").unwrap()), "not_sap");
        assert_eq!(slug(&parse_property("not some_vertex(rm:e_le(0))").unwrap()), "not_some_vertex_rm_e_le_0");
    }
}
