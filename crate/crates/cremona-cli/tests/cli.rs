//! End-to-end checks of the `cremona` binary: spec'd report shapes,
//! deterministic output, and exit codes.

use serde_json::Value;
use std::process::{Command, Output};

fn cremona(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cremona"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> Value {
    let out = cremona(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

/// Every JSON report is a top-level object with an "input" echo; "degrees"
/// is an integer array and "classification" an object when present.
fn check_schema(value: &Value) {
    let obj = value.as_object().expect("top-level object");
    assert!(obj.contains_key("input"), "missing input echo");
    if let Some(degrees) = obj.get("degrees") {
        assert!(degrees
            .as_array()
            .expect("degrees is an array")
            .iter()
            .all(|d| d.is_u64()));
    }
    if let Some(class) = obj.get("classification") {
        let class = class.as_object().expect("classification is an object");
        assert!(class.contains_key("kind"));
    }
    if let Some(verdict) = obj.get("verdict") {
        assert!(verdict.is_string());
    }
}

#[test]
fn degrees_reports_the_bounded_sequence() {
    let v = stdout_json(&["degrees", "--family", "u:n=2,t=3", "--field", "Q", "-M", "8"]);
    check_schema(&v);
    assert_eq!(v["degrees"], serde_json::json!([2, 3, 4, 4, 4, 4, 4, 4]));
    assert_eq!(v["classification"]["kind"], "bounded");
    assert_eq!(v["classification"]["max"], 4);
}

#[test]
fn degrees_reports_the_linear_sequence() {
    let v = stdout_json(&["degrees", "--family", "u:n=2,t=1/2", "-M", "6"]);
    check_schema(&v);
    assert_eq!(v["degrees"], serde_json::json!([2, 3, 4, 5, 6, 7]));
    assert_eq!(v["classification"]["kind"], "linear");
    assert_eq!(v["classification"]["slope"], 1);
}

#[test]
fn degrees_accepts_a_raw_map() {
    let v = stdout_json(&[
        "degrees",
        "--map",
        "x0*x1; x1^2 + x0*x1; x1*x2 + 1/2*x0*x2",
        "-M",
        "5",
        "--window",
        "3",
    ]);
    check_schema(&v);
    assert_eq!(v["degrees"], serde_json::json!([2, 3, 4, 5, 6]));
}

#[test]
fn classify_family_reports_the_exact_verdict() {
    let v = stdout_json(&["classify", "--family", "s:n=2,a=8,xi=2", "--field", "Q"]);
    check_schema(&v);
    assert_eq!(v["verdict"], "algebraic");
    assert_eq!(v["k"], 3);

    let v = stdout_json(&["classify", "--family", "s:n=2,a=3,xi=2"]);
    assert_eq!(v["verdict"], "not_algebraic");

    let v = stdout_json(&["classify", "--family", "u:n=2,t=7", "--field", "Fp=5"]);
    assert_eq!(v["verdict"], "algebraic");
    assert_eq!(v["k"], 2);
}

#[test]
fn classify_map_reports_growth_evidence() {
    let v = stdout_json(&[
        "classify",
        "--map",
        "x0*x1; x1^2 + x0*x1; x1*x2 + 1/2*x0*x2",
        "-M",
        "8",
    ]);
    check_schema(&v);
    assert_eq!(v["verdict"], "not_algebraic_evidence");
    assert_eq!(v["classification"]["kind"], "linear");
}

#[test]
fn verify_conjugacy_normalizes_family_members() {
    let v = stdout_json(&["verify-conjugacy", "--family", "u:n=2,t=2"]);
    check_schema(&v);
    assert_eq!(v["verdict"], "OK: conjugate to rho(0)");
    assert_eq!(v["k"], 2);

    let v = stdout_json(&["verify-conjugacy", "--family", "s:n=2,a=8,xi=2"]);
    assert_eq!(v["verdict"], "OK: conjugate to rho(1,2)");

    let v = stdout_json(&["verify-conjugacy", "--family", "u:n=2,t=1/2"]);
    assert_eq!(
        v["verdict"],
        "NOT ALGEBRAIC: no conjugation to the normal form exists"
    );
}

#[test]
fn verify_inverse_accepts_family_and_explicit_pairs() {
    let v = stdout_json(&["verify-inverse", "--family", "u:n=2,t=1/2"]);
    assert_eq!(v["verdict"], "OK: inverse verified");

    let v = stdout_json(&[
        "verify-inverse",
        "--map",
        "x0; x1 + x0; x2",
        "--inverse",
        "x0; x1 - x0; x2",
    ]);
    assert_eq!(v["verdict"], "OK: inverse verified");

    let v = stdout_json(&[
        "verify-inverse",
        "--map",
        "x0; x1 + x0; x2",
        "--inverse",
        "x0; x1 + x0; x2",
    ]);
    assert_eq!(v["verdict"], "FAIL: not an inverse pair");
}

#[test]
fn compose_and_power_emit_maps() {
    let v = stdout_json(&["compose", "u:n=2,t=0", "u:n=2,t=0"]);
    check_schema(&v);
    assert_eq!(v["map"], "x0; 2*x0 + x1; x2");
    assert_eq!(v["degree"], 1);

    let v = stdout_json(&["power", "--family", "u:n=2,t=3", "-m", "4"]);
    assert_eq!(v["degree"], 4);

    // composing a map text with a family operand
    let v = stdout_json(&["compose", "x0; x2; x1", "x0; x2; x1"]);
    assert_eq!(v["map"], "x0; x1; x2");
}

#[test]
fn embed_wd_flags_the_degenerate_point() {
    let v = stdout_json(&["embed-wd", "--kind", "u", "-n", "2", "--coords", "0,1"]);
    check_schema(&v);
    assert_eq!(
        v["verdict"],
        "not birational (zero component or constant tuple)"
    );
    let v = stdout_json(&["embed-wd", "--kind", "u", "-n", "2", "--coords", "1,3"]);
    assert_eq!(v["verdict"], "birational (inverse verified)");
    assert_eq!(v["degree"], 2);

    let v = stdout_json(&["embed-wd", "--kind", "s", "-n", "2", "--coords", "1,1,0"]);
    assert_eq!(
        v["verdict"],
        "not birational (zero component or constant tuple)"
    );
    let v = stdout_json(&["embed-wd", "--kind", "s", "-n", "2", "--coords", "1,3,2"]);
    assert_eq!(v["verdict"], "birational (inverse verified)");
}

#[test]
fn sweep_emits_one_csv_row_per_parameter() {
    let out = cremona(&[
        "sweep",
        "--family",
        "u:n=2",
        "--values",
        "0,1/2,2",
        "-M",
        "6",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(
        lines[0],
        "param,m1,m2,m3,m4,m5,m6,kind,max,slope,intercept,verdict,k"
    );
    assert_eq!(lines[1], "0,1,1,1,1,1,1,bounded,1,,,algebraic,0");
    assert_eq!(lines[2], "1/2,2,3,4,5,6,7,linear,,1,1,not_algebraic,");
    assert_eq!(lines[3], "2,2,3,3,3,3,3,bounded,3,,,algebraic,2");
}

#[test]
fn sweep_json_carries_per_entry_reports() {
    let v = stdout_json(&[
        "sweep",
        "--family",
        "s:n=2,xi=2",
        "--values",
        "8,3",
        "-M",
        "6",
    ]);
    check_schema(&v);
    let rows = v["sweep"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["param"], "8");
    assert_eq!(rows[0]["verdict"], "algebraic");
    assert_eq!(rows[0]["k"], 3);
    assert_eq!(rows[1]["verdict"], "not_algebraic");
}

#[test]
fn output_is_deterministic() {
    let args = ["degrees", "--family", "s:n=2,a=3,xi=2", "-M", "10"];
    let first = cremona(&args);
    let second = cremona(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn bad_syntax_exits_two() {
    for args in [
        &["degrees", "--family", "u:n=2,t=zz"] as &[&str],
        &["degrees", "--family", "w:n=2,t=1"],
        &["degrees", "--map", "x0*x1; x9"],
        &["degrees", "--family", "u:n=2,t=1", "--field", "Fp=6"],
        &["degrees"],
    ] {
        let out = cremona(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
    }
}

#[test]
fn contract_violations_exit_one() {
    for args in [
        // m = 0 violates the power precondition
        &["power", "--map", "x0; x1; x2", "-m", "0"] as &[&str],
        // mixed component degrees violate the tuple contract
        &["degrees", "--map", "x0^2; x1; x2"],
        // dimension mismatch in composition
        &["compose", "x0; x1; x2", "x0; x1"],
    ] {
        let out = cremona(args);
        assert_eq!(out.status.code(), Some(1), "args: {args:?}");
    }
}
