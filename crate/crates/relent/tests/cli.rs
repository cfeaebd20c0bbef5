//! End-to-end checks of the `relent` binary: exit codes, output formats,
//! and reproducibility.

use std::fs;
use std::process::{Command, Output};

use relent::qlinalg::DensityMatrix;

fn relent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn compute_constrained_reports_known_value() {
    let out = relent(&[
        "compute", "--family", "w", "--f2", "0.1666666667", "--pair", "AB", "--method",
        "constrained",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("0.354761489"), "missing value in:\n{text}");
    assert!(text.contains("constrained"));
}

#[test]
fn compute_mixture_bc_matches_closed_form_digits() {
    let out = relent(&[
        "compute", "--family", "w", "--f2", "0.1666666667", "--pair", "BC", "--method", "mixture",
        "--restarts", "4", "--seed", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0.04841"), "got:\n{}", stdout(&out));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "compute", "--family", "w", "--f2", "0.2", "--pair", "AB", "--method", "mixture",
        "--restarts", "2", "--seed", "5", "--format", "json",
    ];
    let a = relent(&args);
    let b = relent(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "JSON output must be reproducible");
}

#[test]
fn state_json_is_valid_interchange() {
    let out = relent(&["state", "--family", "lambda", "--a2", "0.5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rho: DensityMatrix = serde_json::from_str(&stdout(&out)).expect("valid interchange JSON");
    assert_eq!(rho.dims(), &[2, 2, 2]);
}

#[test]
fn compute_accepts_state_files_and_flags_bad_ones() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("sep.json");
    let state = relent(&["state", "--family", "ghz", "--pair", "AB", "--format", "json"]);
    fs::write(&good, state.stdout).unwrap();

    let out = relent(&[
        "compute", "--input", good.to_str().unwrap(), "--method", "mixture", "--restarts", "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    // GHZ pair reductions are separable.
    let text = stdout(&out);
    let value_line = text.lines().find(|l| l.starts_with("E (bits)")).unwrap();
    let value: f64 = value_line.split_whitespace().last().unwrap().parse().unwrap();
    assert!(value < 1e-5, "separable input must give ~0, got {value}");

    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"dims":[2],"re":[[0.9,0.0],[0.0,0.0]],"im":[[0.0,0.0],[0.0,0.0]]}"#)
        .unwrap();
    let out = relent(&["compute", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty(), "diagnostic expected on stderr");
}

#[test]
fn unconverged_run_exits_with_code_two() {
    let out = relent(&[
        "compute", "--family", "epr", "--method", "mixture", "--restarts", "1", "--max-iters",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_emits_csv_grid() {
    let out = relent(&[
        "compute", "--family", "w", "--pair", "BC", "--method", "constrained", "--sweep",
        "0.1:0.3:0.1",
    ]);
    // Constrained method refuses the BC reductions (different symmetry),
    // so this must be an input error...
    assert_eq!(out.status.code(), Some(1));

    let out = relent(&[
        "compute", "--family", "w", "--pair", "AB", "--method", "constrained", "--sweep",
        "0.1:0.3:0.1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "param,e_bits,converged,boundary_certificate,method");
    assert_eq!(lines.count(), 3);
}

#[test]
fn mregs_ghz_is_consistent() {
    let out = relent(&["mregs", "--family", "ghz", "--restarts", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["report"]["consistent"], serde_json::Value::Bool(true));
    assert!((v["report"]["g"].as_f64().unwrap() - 1.0).abs() < 1e-3);
}

#[test]
fn bound_of_identical_files_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rho.json");
    let state = relent(&["state", "--family", "w", "--f2", "0.2", "--pair", "AB", "--format", "json"]);
    fs::write(&path, state.stdout).unwrap();
    let out = relent(&[
        "bound", "--rho1", path.to_str().unwrap(), "--rho2", path.to_str().unwrap(), "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["bound_bits"].as_f64().unwrap(), 0.0);
}

#[test]
fn missing_arguments_exit_with_one() {
    let out = relent(&["compute", "--family", "w", "--pair", "AB"]);
    assert_eq!(out.status.code(), Some(1), "w family without --f2 must be an input error");
    let out = relent(&["compute"]);
    assert_eq!(out.status.code(), Some(1));
}
