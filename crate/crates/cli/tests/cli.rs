use std::process::{Command, Output};

use serde_json::Value;

fn apery(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apery"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = apery(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array()
        .expect("array")
        .iter()
        .map(|x| x.as_i64().expect("integer"))
        .collect()
}

#[test]
fn frobenius_of_two_three() {
    let v = json(&["core", "--gens", "2,3", "frobenius"]);
    assert_eq!(v["result"]["frobenius"], 1);
}

#[test]
fn generic_apery_matches_family_row() {
    let core = json(&["core", "--gens", "11,46,105,188", "apery", "--wrt", "11"]);
    let fam = json(&["gamma4", "--a", "11", "--d", "24", "apery"]);
    let mut row = ints(&fam["result"]["apery"]);
    row.sort_unstable();
    assert_eq!(ints(&core["result"]["apery"]), row);
    assert_eq!(row, [0, 46, 92, 105, 151, 188, 197, 234, 280, 293, 339]);
}

#[test]
fn pseudo_frobenius_numbers() {
    let v = json(&["core", "--gens", "7,15,24,34", "pf"]);
    assert_eq!(ints(&v["result"]["pf"]), [27, 47]);
}

#[test]
fn hilbert_series_text() {
    let out = apery(&["gamma4", "--a", "11", "--d", "24", "hilbert"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("(1+3x+4x^2+3x^3)/(1-x)"), "{text}");
}

#[test]
fn ideal_generators() {
    let v = json(&["gamma4", "--a", "7", "--d", "1", "ideal"]);
    let text = apery(&["gamma4", "--a", "7", "--d", "1", "ideal"]);
    let text = String::from_utf8(text.stdout).unwrap();
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with('x')).collect();
    assert_eq!(lines.len(), 5, "{text}");
    assert!(lines.contains(&"x1^7 - x2x4"));
    assert!(v["result"].get("ideal").is_some());
}

#[test]
fn verify_all_passes() {
    let out = apery(&["gamma4", "--a", "7", "--d", "1", "--verify", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn geometric_apery_row() {
    let v = json(&["geo", "--a", "7", "--d", "3", "--r", "2", "--h", "1", "--n", "2", "apery"]);
    assert_eq!(ints(&v["result"]["apery"]), [0, 10, 13, 23, 19, 29, 32]);
}

#[test]
fn small_sweeps_have_no_failures() {
    let out = apery(&["sweep", "gamma4", "--a", "7..14", "--d", "1..6", "--ideal"]);
    assert_eq!(out.status.code(), Some(0));
    let out = apery(&["sweep", "geo", "--a", "7..10", "--r", "2..3", "--h", "1", "--n", "1..2", "--d", "auto"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn invalid_parameters_exit_two() {
    for args in [
        &["gamma4", "--a", "6", "--d", "1", "apery"][..],
        &["gamma4", "--a", "8", "--d", "2", "apery"],
        &["core", "--gens", "4,6", "frobenius"],
        &["core", "--gens", "2,x", "frobenius"],
        &["--format", "csv", "gamma4", "--a", "7", "--d", "1", "hilbert"],
    ] {
        let out = apery(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn csv_table_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let out = apery(&[
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
        "gamma4",
        "--a",
        "11",
        "--d",
        "24",
        "table",
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[0].starts_with("s,r0,r1"));
    assert!(lines[3].starts_with("2,22,"));
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--format", "json", "sweep", "gamma4", "--a", "7..12", "--d", "1..4"];
    assert_eq!(apery(&args).stdout, apery(&args).stdout);
}
