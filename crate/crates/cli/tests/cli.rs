use std::path::Path;
use std::process::{Command, Output};

fn minorkit(out_dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minorkit"))
        .args(args)
        .env("MINORKIT_OUT_DIR", out_dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).expect("json on stdout")
}

#[test]
fn eval_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let o = minorkit(dir.path(), &["eval", "--property", "sap", "--graph", "k5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["value"], true);
    let o = minorkit(dir.path(), &["eval", "--property", "planar", "--graph", "k33"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["value"], false);
    let o = minorkit(dir.path(), &["eval", "--property", "all_vertices(rm:planar)", "--graph", "k5"]);
    assert_eq!(o.status.code(), Some(0));
    let o = minorkit(dir.path(), &["eval", "--property", "planar and", "--graph", "k5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error at 10"));
    let o = minorkit(dir.path(), &["eval", "--property", "planar", "--graph", "no-such-graph"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn every_figure_graph_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    for name in minorkit::catalog::SAP_OBSTRUCTIONS {
        let o = minorkit(dir.path(), &["eval", "--property", "sap", "--graph", name]);
        assert_eq!(o.status.code(), Some(1), "{name}");
    }
}

#[test]
fn mine_writes_report_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let o = minorkit(dir.path(), &["mine", "--property", "outerplanar", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("total 2"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("mine-not_outerplanar-n6.json")).unwrap()).unwrap();
    assert_eq!(report["obstructions"].as_array().unwrap().len(), 2);
    assert_eq!(report["target"], "not");
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["entries"][0]["count"], 2);

    let o = minorkit(dir.path(), &["mine", "--property", "some_vertex(rm:e_le(0))", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("Bw k3") && out.contains("CK 2k2"), "{out}");
}

#[test]
fn sap_runs_are_byte_identical_across_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (workers, path) in [("1", &a), ("8", &b)] {
        let o = minorkit(
            dir.path(),
            &["--workers", workers, "mine", "--property", "sap", "--max-n", "8", "--comparison", "--out", path.to_str().unwrap()],
        );
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("total 7"));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn constructive_mining() {
    let dir = tempfile::tempdir().unwrap();
    let o = minorkit(dir.path(), &["mine", "--property", "sap", "--mode", "constructive", "--seed", "k5,k33"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("total 7"));
    let out = dir.path().join("split.json");
    let o = minorkit(
        dir.path(),
        &["mine", "--property", "sap", "--mode", "constructive", "--seed", "k5", "--ops", "vertex-split", "--out", out.to_str().unwrap()],
    );
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["generated"], 3);
    assert_eq!(report["completeness"], "constructive-only");
    let o = minorkit(dir.path(), &["mine", "--property", "sap", "--mode", "constructive", "--ops", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budget_exit_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let o = minorkit(dir.path(), &["mine", "--property", "planar", "--max-n", "6", "--budget-seconds", "0"]);
    assert_eq!(o.status.code(), Some(3));
    let cp = dir.path().join("mine-not_planar-n6.checkpoint.json");
    assert!(cp.is_file());
    let o = minorkit(dir.path(), &["mine", "--property", "planar", "--max-n", "6", "--resume", cp.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("total 2"));
}

#[test]
fn verify_layers() {
    let dir = tempfile::tempdir().unwrap();
    let o = minorkit(dir.path(), &["verify", "--set", "fig3", "--property", "sap", "--max-n", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS all layers"));
    let o = minorkit(dir.path(), &["verify", "--set", "k5,k33", "--property", "planar", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let o = minorkit(dir.path(), &["verify", "--set", "k33_plus_2e", "--property", "sap", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL minimality"));
    let set = dir.path().join("set.txt");
    std::fs::write(&set, "# outerplanar obstructions\nk4\nDFw\n").unwrap();
    let o = minorkit(dir.path(), &["verify", "--set", set.to_str().unwrap(), "--property", "outerplanar", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn enum_canon_convert() {
    let dir = tempfile::tempdir().unwrap();
    let o = minorkit(dir.path(), &["enum", "--max-n", "7", "--count-only"]);
    assert!(stdout(&o).lines().any(|l| l == "7: 1044"));
    let o = minorkit(dir.path(), &["enum", "--max-n", "4"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 2 + 4 + 11);

    let reversed = dir.path().join("p4.txt");
    std::fs::write(&reversed, "4 3\n3 2\n2 1\n1 0\n").unwrap();
    let a = minorkit(dir.path(), &["canon", "--graph", reversed.to_str().unwrap()]);
    let b = minorkit(dir.path(), &["canon", "--graph", "p4"]);
    assert_eq!(stdout(&a), stdout(&b));

    let k3 = dir.path().join("k3.txt");
    std::fs::write(&k3, "3 3\n0 1\n0 2\n1 2\n").unwrap();
    let o = minorkit(dir.path(), &["convert", "--in", "edge-list", "--out", "graph6", "--input", k3.to_str().unwrap()]);
    assert_eq!(stdout(&o), "Bw\n");
    let g6 = dir.path().join("k3.g6");
    std::fs::write(&g6, "Bw\n").unwrap();
    let o = minorkit(dir.path(), &["convert", "--in", "graph6", "--out", "edge-list", "--input", g6.to_str().unwrap()]);
    assert_eq!(stdout(&o), "3 3\n0 1\n0 2\n1 2\n");
}
