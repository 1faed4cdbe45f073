use std::path::PathBuf;
use std::process::{Command, Output};

fn shipped(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coring-lab")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn galois_yes_and_no() {
    let o = run(&["galois", &shipped("sw.json"), "--sigma", "Sigma", "--coring", "C"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("GALOIS: yes (can is 4×4 invertible)"));
    let o = run(&["galois", &shipped("grp.json"), "--sigma", "Sigma"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("GALOIS: no (rank 1 of 2)"));
}

#[test]
fn report_on_mat_is_all_green_json() {
    let o = run(&["report", &shipped("mat.json"), "--config", &shipped("mat.report.json"), "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["diagnostics"]["equivalence"], true);
    assert_eq!(v["consistency"]["consistent"], true);
    assert!(v["fixture_digest"].as_str().unwrap().starts_with("sha256:"));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let o = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
    let o = run(&["check", &shipped("grp-broken-counit.json"), "--strict"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["galois", &shipped("sw.json"), "--sigma", "Nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn lenient_check_of_sabotage_exits_with_one() {
    let o = run(&["check", &shipped("grp-broken-counit.json"), "--lenient"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL corings.C: left counit (differs on basis vector 2)"));
}

#[test]
fn sweedler_comatrix_and_cotensor_commands() {
    let o = run(&["sweedler", &shipped("sw.json"), "--algebra", "A", "--subalgebra", "B"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("coinvariants of 1⊗1: dimension 1"));
    let o = run(&["comatrix", &shipped("mat.json"), "--sigma", "Sigma"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Σ*⊗_B Σ has dimension 4"));
    let o = run(&["cotensor", &shipped("grp.json"), "--comodule", "Q_e", "--sigma", "Sigma"]);
    assert!(stdout(&o).contains("Q_e □ Σ† has dimension 1"));
    let o = run(&["can", &shipped("grp.json"), "--sigma", "Sigma", "--coring", "C", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["matrices"]["can"].as_array().unwrap().len(), 2);
}

#[test]
fn catalog_lists_and_prints() {
    let o = run(&["catalog"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("nonflat")));
    let o = run(&["catalog", "sw"]);
    assert_eq!(stdout(&o), std::fs::read_to_string(shipped("sw.json")).unwrap());
    assert_eq!(run(&["catalog", "nope"]).status.code(), Some(2));
}
