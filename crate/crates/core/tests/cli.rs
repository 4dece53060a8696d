//! End-to-end checks of the command-line interface: documented invocations,
//! byte-for-byte deterministic output, and the exit-code contract
//! (0 pass, 1 counterexample, 2 usage, 3 pole).

use std::process::{Command, Output};

fn flatsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flatsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn compute_depth_one_value() {
    let out = flatsum(&["compute", "--sum", "bz", "--index", "1", "--upper", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"num":[["2","1"],["1","1"]],"den":[["1","1"],["1","1"]]}"#
    );
}

#[test]
fn compute_star_row_golden_value() {
    let out = flatsum(&[
        "compute", "--sum", "bz-star", "--index", "1,2", "--as-row", "--upper", "3",
    ]);
    assert!(out.status.success());
    // q + q^2/[2]^2 + q^2/[2]^3 over the monic denominator (1+q)^3.
    assert_eq!(
        stdout(&out).trim(),
        r#"{"num":[["0","1"],["1","1"],["5","1"],["4","1"],["1","1"]],"den":[["1","1"],["3","1"],["3","1"],["1","1"]]}"#
    );
}

#[test]
fn compute_empty_region_is_zero() {
    let out = flatsum(&["compute", "--sum", "bz", "--index", "2,1", "--upper", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), r#"{"num":[],"den":[["1","1"]]}"#);
}

#[test]
fn compute_is_deterministic() {
    let args = ["compute", "--sum", "qflat", "--index", "1,2", "--upper", "5"];
    let first = stdout(&flatsum(&args));
    let second = stdout(&flatsum(&args));
    assert_eq!(first, second);
    assert!(!first.trim().is_empty());
}

#[test]
fn compute_at_q1_and_at_root() {
    let out = flatsum(&[
        "compute", "--sum", "bz", "--index", "1", "--upper", "3", "--at-q1",
    ]);
    assert_eq!(stdout(&out).trim(), r#"["3","2"]"#);

    let out = flatsum(&[
        "compute", "--sum", "bz", "--index", "1", "--upper", "3", "--root", "3",
    ]);
    assert_eq!(
        stdout(&out).trim(),
        r#"{"level":3,"residue":[["1","1"],["-1","1"]]}"#
    );
}

#[test]
fn compute_schur_shape_from_inline_json() {
    let shape = r#"{"cells": [[1,2],[2,1],[2,2]], "weights": {"-1": 1, "0": 1, "1": 1}}"#;
    let out = flatsum(&[
        "compute", "--sum", "schur-bz", "--shape", shape, "--upper", "3",
    ]);
    assert!(out.status.success());
    // Two fillings: 1/([1][1][2]) + 1/([1][2][2]).
    let direct: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let expect = serde_json::json!({
        "num": [["2", "1"], ["1", "1"]],
        "den": [["1", "1"], ["2", "1"], ["1", "1"]],
    });
    assert_eq!(direct, expect);
}

#[test]
fn usage_errors_exit_two() {
    let out = flatsum(&["compute", "--sum", "nonsense", "--index", "1", "--upper", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = flatsum(&["compute", "--sum", "bz", "--upper", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = flatsum(&["verify", "--theorem", "unknown"]);
    assert_eq!(out.status.code(), Some(2));
    // --as-row with a strict-chain kind is a declared mismatch.
    let out = flatsum(&[
        "compute", "--sum", "bz", "--index", "1,2", "--as-row", "--upper", "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pole_errors_exit_three() {
    // [3]_q is the numerator of bz((1),4)'s denominator chain at the third
    // root of unity: 1/[3] has a pole there.
    let out = flatsum(&[
        "compute", "--sum", "bz", "--index", "1", "--upper", "4", "--root", "3",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_writes_report_and_exits_zero() {
    let dir = std::env::temp_dir().join("flatsum-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let report_path = dir.join("msw.json");
    let out = flatsum(&[
        "verify",
        "--theorem",
        "msw-q",
        "--max-weight",
        "3",
        "--uppers",
        "1..4",
        "--report",
        report_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let body = std::fs::read_to_string(&report_path).unwrap();
    let report: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(report["theorem"], "msw-q");
    assert_eq!(report["summary"]["failed"], 0);
    // Round trip: parse then serialize compares equal as values.
    let again: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(report, again);
}

#[test]
fn verify_resolves_variants() {
    let out = flatsum(&[
        "verify",
        "--theorem",
        "transport-linear",
        "--max-weight",
        "3",
        "--uppers",
        "1..4",
        "--variants",
        "all",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("linear region resolved: derived"));

    let out = flatsum(&[
        "verify",
        "--theorem",
        "schur-q",
        "--max-cells",
        "4",
        "--uppers",
        "2..3",
        "--readings",
        "all",
        "--no-oracle",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("reading resolved: first-plain"));
}

#[test]
fn verify_reports_counterexamples_with_exit_one() {
    // The two printed candidates both fail on wide diagonals, so requesting
    // only them must produce a counterexample exit.
    let out = flatsum(&[
        "verify",
        "--theorem",
        "schur-q",
        "--max-cells",
        "4",
        "--uppers",
        "3..3",
        "--readings",
        "both",
        "--no-oracle",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn transport_trace_exits_by_chain_status() {
    let out = flatsum(&["transport", "--index", "1,2", "--upper", "4", "--trace"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("constant"));

    // The printed variant breaks a chain with single-entry blocks.
    let out = flatsum(&[
        "transport", "--index", "1,1,1", "--upper", "2", "--variant", "printed",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bench_emits_csv_with_op_counts() {
    let out = flatsum(&["bench", "--sum", "bz", "--index", "2", "--uppers", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("kind,argument,upper,evaluator,ring_ops,wall_ms")
    );
    let dp: Vec<&str> = lines.next().unwrap().split(',').collect();
    let naive: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(dp[3], "dp");
    assert_eq!(naive[3], "naive");
    let dp_ops: u64 = dp[4].parse().unwrap();
    let naive_ops: u64 = naive[4].parse().unwrap();
    assert!(dp_ops > 0 && naive_ops > 0);
}
