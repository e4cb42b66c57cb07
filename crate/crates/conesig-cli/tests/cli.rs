//! End-to-end tests of the `conesig` binary: output, stderr, exit codes.

use std::process::{Command, Output};

fn conesig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conesig"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn signature_prints_canonical_form_and_signature() {
    let out = conesig(&["signature", "H3(O)"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("canonical: H3(O)"));
    assert!(stdout(&out).contains("signature: (27, 79)"));

    let out = conesig(&["signature", "L2"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("canonical: R2"));
    assert!(stdout(&out).contains("signature: (2, 2)"));

    let out = conesig(&["signature", "H3(C) + L30"]);
    assert!(stdout(&out).contains("signature: (39, 453)"));
}

#[test]
fn malformed_expressions_exit_with_usage_errors() {
    let out = conesig(&["signature", "L4 +"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("parse error at byte"));

    let out = conesig(&["signature", "H5(O)"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("does not exist"));
}

#[test]
fn relate_reports_each_verdict() {
    let cases = [
        ("H3(C) + L18", "L14 + L13", "Simulacra"),
        ("R2", "L1 + L1", "Isomorphic"),
        ("L5", "L4 + L1", "Distinct"),
    ];
    for (a, b, verdict) in cases {
        let out = conesig(&["relate", a, b]);
        assert_eq!(exit_code(&out), 0);
        let text = stdout(&out);
        assert_eq!(text.lines().last(), Some(verdict), "relate {a} / {b}");
    }
}

#[test]
fn simulacra_lists_witnesses_and_exits_zero() {
    let out = conesig(&["simulacra", "H3(C) + L9"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).lines().any(|l| l == "L10 + R8"));
}

#[test]
fn simulacra_exits_one_when_none_exist() {
    let out = conesig(&["simulacra", "L7"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("no simulacra found"));
}

#[test]
fn simulacra_search_can_be_restricted() {
    let out = conesig(&["simulacra", "L4 + L4", "--lorentz-only"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).lines().any(|l| l == "L5 + R3"));

    let out = conesig(&["simulacra", "H3(R) + H3(R)", "--max-results", "1"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 1);

    let out = conesig(&["simulacra", "H3(R) + H3(R)", "--allow", "R"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).lines().any(|l| l == "H4(R) + R2"));

    let out = conesig(&["simulacra", "L4 + L4", "--lorentz-only", "--allow", "R"]);
    assert_eq!(exit_code(&out), 2);

    let out = conesig(&["simulacra", "L4 + L4", "--allow", "X"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("unknown algebra"));
}

#[test]
fn verify_writes_a_json_report() {
    let path = std::env::temp_dir().join("conesig-h2-report.json");
    let _ = std::fs::remove_file(&path);
    let out = conesig(&[
        "verify",
        "h2-consistency",
        "--json",
        path.to_str().expect("temp path is utf-8"),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("claim h2-consistency: pass"));

    let body = std::fs::read_to_string(&path).expect("report file exists");
    let report: serde_json::Value = serde_json::from_str(&body).expect("report is json");
    assert_eq!(report["claim"], "h2-consistency");
    assert_eq!(report["verdict"], "pass");
    assert_eq!(report["records"].as_array().expect("records array").len(), 3);
    assert!(report["elapsed_ms"].is_u64());
    assert_eq!(report["records"][0]["input"], "H2(R)");
    std::fs::remove_file(&path).expect("cleanup");
}

#[test]
fn verify_rejects_unknown_claims() {
    let out = conesig(&["verify", "bogus"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("unknown claim"));
    assert!(stderr(&out).contains("lnln-formula"));
}

#[test]
fn tables_regenerate_with_expected_rows() {
    let out = conesig(&["table", "1"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).lines().any(|l| l == "H3(H),3,15,36"));

    let out = conesig(&["table", "2"]);
    assert!(stdout(&out).lines().any(|l| l == "R5,5,5"));

    let out = conesig(&["table", "3"]);
    assert!(stdout(&out).lines().any(|l| l == "9,18,54,L10 + R8"));

    let out = conesig(&["table", "B"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).lines().any(|l| l == "14,\"1,10,17\""));

    let out = conesig(&["table", "B", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json rows");
    let row14 = rows
        .as_array()
        .expect("array of rows")
        .iter()
        .find(|row| row["n"] == "14")
        .expect("row for n = 14");
    assert_eq!(row14["partition"], "1,10,17");

    let out = conesig(&["table", "7"]);
    assert_eq!(exit_code(&out), 2);
}
