mod common;

use common::{brute_canonical_key, minor_closure};
use minorkit::canon::enumerate_by_order;
use minorkit::catalog::lookup;
use minorkit::minor::{has_minor, is_minor_minimal, MinimalityMode};
use minorkit::par::Exec;
use minorkit::planarity::{is_outerplanar, is_planar};
use minorkit::property::parse_property;
use minorkit::Graph;

fn graphs(max: usize) -> Vec<Graph> {
    enumerate_by_order(max, None, Exec::default()).unwrap().into_iter().flatten().collect()
}

#[test]
fn planarity_matches_kuratowski_minors() {
    let (k5, k33) = (lookup("k5").unwrap(), lookup("k33").unwrap());
    let all = graphs(7);
    assert_eq!(all.len(), 1252);
    for g in &all {
        let oracle = has_minor(g, &k5).is_none() && has_minor(g, &k33).is_none();
        assert_eq!(is_planar(g), oracle, "{g:?}");
    }
}

#[test]
fn outerplanarity_matches_forbidden_minors() {
    let (k4, k23) = (lookup("k4").unwrap(), lookup("k23").unwrap());
    for g in graphs(7) {
        let oracle = has_minor(&g, &k4).is_none() && has_minor(&g, &k23).is_none();
        assert_eq!(is_outerplanar(&g).unwrap(), oracle, "{g:?}");
    }
}

#[test]
fn has_minor_matches_closure_oracle() {
    let hosts = graphs(6);
    let patterns = graphs(5);
    let mut pairs = 0;
    for host in &hosts {
        let closure = minor_closure(host);
        for pat in &patterns {
            let want = closure.contains(&(pat.order(), brute_canonical_key(pat)));
            let got = has_minor(host, pat);
            if let Some(m) = &got {
                m.validate(host, pat).unwrap();
            }
            assert_eq!(got.is_some(), want, "host {host:?} pattern {pat:?}");
            pairs += 1;
        }
    }
    assert!(pairs >= 10_000);
}

#[test]
fn minimality_modes_agree_for_closed_complements() {
    // one-step and full minimality coincide when the complement is closed
    for text in ["not planar", "not sap", "not outerplanar", "not tw_le(2)"] {
        let p = parse_property(text).unwrap();
        for g in graphs(6) {
            let one = is_minor_minimal(&g, &p, MinimalityMode::OneStep).unwrap();
            let full = is_minor_minimal(&g, &p, MinimalityMode::Full).unwrap();
            assert_eq!(one, full, "{text} {g:?}");
        }
    }
}

#[test]
fn full_minimality_matches_closure_oracle() {
    // g is minimal iff it satisfies p and no proper minor in its closure does
    let p = parse_property("not ca").unwrap();
    let all = graphs(6);
    let holds: std::collections::HashMap<(usize, u64), bool> =
        all.iter().map(|h| ((h.order(), brute_canonical_key(h)), p.eval(h))).collect();
    for g in &all {
        let own = (g.order(), brute_canonical_key(g));
        let proper_hit = minor_closure(g).into_iter().any(|k| k != own && holds[&k]);
        let want = p.eval(g) && !proper_hit;
        assert_eq!(is_minor_minimal(g, &p, MinimalityMode::Full).unwrap(), want, "{g:?}");
    }
}
