use std::process::{Command, Output};

use nodal_core::engine::{compute_universal, EngineConfig};
use nodal_core::YPolynomial;
use serde_json::Value;

fn nodalcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nodalcount"))
        .args(args)
        .env_remove("NODALCOUNT_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn ok(args: &[&str]) -> String {
    let out = nodalcount(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

#[test]
fn universal_r1_text() {
    let text = ok(&["universal", "--r", "1", "--format", "text"]);
    assert!(text.lines().any(|l| l == "a_1 = y(3,0,0) + y(2,1,0) + y(1,0,1)"), "{text}");
    assert!(text.lines().any(|l| l == "b_1 = v^3 + v^2*w1 + v*w2"), "{text}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["universal", "--r", "9"][..],
        &["universal", "--r", "0"],
        &["universal", "--r", "2", "--C", "1/0"],
        &["chern", "--i", "5"],
        &["count", "--r", "1", "--L2", "1"],
        &["count", "--r", "1", "--d", "3", "--L2", "1", "--LK", "0", "--K2", "0", "--c2", "0"],
        &["oracle", "--d", "3", "--r", "2", "--irreducible"],
        &["frobnicate"],
    ] {
        assert_eq!(nodalcount(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn qtable_chern_goettsche() {
    assert!(ok(&["qtable", "--imax", "2", "--amax", "2"]).lines().any(|l| l == "Q(2;2,0,0) = -4"));
    assert!(ok(&["chern", "--i", "2"]).lines().any(|l| l == "x_2 = v^3 + v^2*w1 + v*w2"));
    assert_eq!(ok(&["goettsche", "--r", "1"]), "T_1 = 3*L2 + 2*LK + c2\n");
    assert_eq!(ok(&["severi", "--r", "1"]), "N_1(d) = 3*d^2 - 6*d + 3\n");
}

#[test]
fn counts() {
    assert_eq!(ok(&["count", "--r", "2", "--d", "3"]), "count = 21\n");
    assert_eq!(ok(&["count", "--r", "1", "--L2", "9", "--LK", "-9", "--K2", "9", "--c2", "3"]), "count = 12\n");
    assert!(ok(&["count", "--r", "8", "--d", "4"]).contains("outside validity range"));
    assert_eq!(ok(&["quadpoint", "--d", "5"]), "quadpoint = 180\n");
    assert_eq!(ok(&["oracle", "--d", "3", "--r", "2"]), "21\n");
    assert_eq!(ok(&["oracle", "--d", "4", "--r", "3", "--irreducible"]), "620\n");
}

#[test]
fn validate_passes_in_range() {
    let text = ok(&["validate", "--dmax", "4", "--rmax", "3"]);
    assert!(text.lines().filter(|l| l.starts_with('(')).all(|l| l.ends_with("PASS")), "{text}");
    assert!(ok(&["validate", "--dmax", "3", "--rmax", "1"]).contains("(3,1): 12 = 12 PASS"));
}

#[test]
fn validate_without_correction_fails_at_eight_nodes() {
    let out = nodalcount(&["validate", "--dmax", "5", "--rmax", "8", "--no-correction"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let failing: Vec<&str> = text.lines().filter(|l| l.contains("FAIL (")).collect();
    assert_eq!(failing.len(), 1, "{text}");
    assert!(failing[0].starts_with("(5,8): -47664 != 26136 FAIL (engine - oracle = -73800"));
    assert!(failing[0].contains("matching correction C = 3280"));
}

#[test]
fn correction_only_changes_eighth_entries() {
    let with = ok(&["universal", "--r", "8"]);
    let without = ok(&["universal", "--r", "8", "--no-correction"]);
    let differing: Vec<String> = with
        .lines()
        .zip(without.lines())
        .filter(|(a, b)| a != b)
        .map(|(a, _)| a.split(" = ").next().unwrap().to_string())
        .collect();
    assert_eq!(differing, ["b_8", "a_8", "N_8"]);
}

#[test]
fn json_is_deterministic_and_canonical() {
    let args = ["universal", "--r", "4", "--format", "json"];
    let first = ok(&args);
    assert_eq!(first, ok(&args));
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["engine"]["correction"], "3280/1");
    let res = compute_universal(&EngineConfig::new(4).unwrap()).unwrap();
    assert_eq!(YPolynomial::from_json(&v["N_4"]).unwrap(), *res.node_poly());
    // Keys come out sorted.
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn latex_output() {
    let tex = ok(&["goettsche", "--r", "1", "--format", "latex"]);
    assert!(tex.starts_with("\\begin{align*}\n"));
    assert!(tex.contains("T_{1} &= "));
    assert!(tex.ends_with("\\end{align*}\n"));
}

#[test]
fn oracle_cache_file_is_reused() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.json");
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_nodalcount"))
            .args(["oracle", "--d", "5", "--r", "4"])
            .env("NODALCOUNT_CACHE", &path)
            .output()
            .unwrap()
    };
    let cold = run();
    assert_eq!(cold.status.code(), Some(0));
    let saved = std::fs::read_to_string(&path).unwrap();
    assert!(serde_json::from_str::<Value>(&saved).unwrap().as_object().is_some_and(|m| !m.is_empty()));
    let warm = run();
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), saved);
}
