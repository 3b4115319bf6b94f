//! End-to-end runs of the `ejalab` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn ejalab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ejalab"))
        .args(args)
        .env_remove("EJALAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn example(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "docs", "examples", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn lt_on_albert_algebra() {
    let o = ejalab(&["lt", "H(3,O)"]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("infeasible"), "{s}");
    assert!(s.contains("729 | 45 | 81 | 153"), "{s}");
}

#[test]
fn tensor_of_two_by_two_complex() {
    let o = ejalab(&["tensor", "H(2,C)"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("n: 16 = 4²"), "{s}");
    assert!(s.contains("k: 4 = 2²"), "{s}");
}

#[test]
fn real_kron_fails_span_condition() {
    let o = ejalab(&["verify", "H(2,R)", "--model", "real-kron"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("C5: FAIL rank 9/10"), "{}", stdout(&o));
}

#[test]
fn classify_prints_totals() {
    let o = ejalab(&["classify", "H(3,C) (+) spin(4) (+) R"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let total = s.lines().find(|l| l.starts_with("total")).unwrap();
    assert_eq!(total.split_whitespace().collect::<Vec<_>>(), ["total", "15", "6"]);
}

#[test]
fn parse_and_domain_errors_exit_two() {
    assert_eq!(ejalab(&["lt", "H(4,O)"]).status.code(), Some(2));
    let o = ejalab(&["classify", "H(3,C) + R"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 7"));
    assert_eq!(ejalab(&["lt"]).status.code(), Some(2));
}

#[test]
fn json_reports_are_deterministic() {
    let args = ["verify", "H(2,C)", "--samples", "20", "--json"];
    let a = ejalab(&args);
    let b = ejalab(&[&args[..], &["--threads", "1"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(doc["schema"], "ejalab-report/1");
    assert_eq!(doc["seed"], 0xE7A1);
    assert_eq!(doc["tolerance"], 1e-9);
    assert_eq!(doc["result"]["passed"], true);
}

#[test]
fn seed_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_ejalab"))
        .args(["lt", "R", "--json"])
        .env("EJALAB_SEED", "0x10")
        .output()
        .unwrap();
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["seed"], 16);
}

#[test]
fn spectral_of_example_files() {
    let o = ejalab(&["spectral", "H(2,C)", &example("h2c.json"), "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    // [[1, (1-i)/2], [(1+i)/2, -1]]: eigenvalues ±√(1 + 1/2).
    let ev: Vec<f64> = doc["result"]["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    let r = 1.5f64.sqrt();
    assert!((ev[0] - r).abs() < 1e-12 && (ev[1] + r).abs() < 1e-12, "{ev:?}");

    let o = ejalab(&["spectral", "H(3,C) (+) spin(5) (+) R", &example("mixed.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("q6:"));
}

#[test]
fn spectral_rejects_bad_files() {
    let o = ejalab(&["spectral", "H(3,C)", &example("h2c.json")]);
    assert_eq!(o.status.code(), Some(2));
    let o = ejalab(&["spectral", "R", "/nonexistent/file.json"]);
    assert_eq!(o.status.code(), Some(2));
}
