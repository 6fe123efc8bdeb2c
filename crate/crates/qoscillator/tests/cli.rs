//! End-to-end checks of the command-line interface: goldens, JSON
//! schema stability, and exit codes.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qoscillator"))
}

#[test]
fn hermite_text_golden() {
    let out = bin().args(["hermite", "--n", "2", "--format", "text"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "z^2 + (1+q) + z^-2");
}

#[test]
fn verify_json_schema_and_exit_code() {
    let out = bin()
        .args(["verify", "--identity", "eq27", "--order", "6", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["identity"], "eq27");
    assert_eq!(value["status"], "pass");
    assert!(value["params"].is_object());
    assert!(value["checked"].is_string());
    assert!(value["elapsed_ms"].is_u64());
    assert!(value.get("counterexample").is_none());
}

#[test]
fn verify_text_and_json_verdicts_agree() {
    let text = bin()
        .args(["verify", "--identity", "eq29", "--n-max", "3", "--format", "text"])
        .output()
        .unwrap();
    let json = bin()
        .args(["verify", "--identity", "eq29", "--n-max", "3", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(text.status.code(), json.status.code());
    assert!(String::from_utf8_lossy(&text.stdout).contains("pass"));
    let value: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(value["status"], "pass");
}

#[test]
fn usage_error_exits_2() {
    // Negative sweep bound: rejected by flag parsing.
    let out = bin().args(["verify", "--identity", "eq31", "--n-max", "-1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // Unknown quarter exponent literal.
    let out = bin()
        .args(["matrix-element", "--m", "1", "--n", "1", "--mu", "1/3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // Missing required flag.
    let out = bin().args(["hermite"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn limit_subcommand_passes() {
    let out = bin()
        .args(["limit", "--identity", "eq6", "--n", "3", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["identity"], "eq6");
    assert_eq!(value["status"], "pass");
}

#[test]
fn matrix_element_text_output() {
    let out = bin()
        .args([
            "matrix-element", "--m", "0", "--n", "1", "--mu", "1/4", "--nu", "1/2",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    // U_{0,1} = -q^{nu - 1/2} beta = -1 * alpha^0 beta^1 at nu = 1/2.
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "(-1) alpha^0 beta^1"
    );
}

#[test]
fn wall_and_laguerre_render() {
    let out = bin().args(["wall", "--n", "1"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1 - (1/(1-q))*x");
    let out = bin().args(["laguerre", "--n", "1", "--rho", "0"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1 - (q/(1-q))*x");
}
