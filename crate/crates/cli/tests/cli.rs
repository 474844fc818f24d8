//! Process-level behavior of the binary: exit codes and report routing.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_coxlab"))
}

#[test]
fn unknown_series_exits_with_usage_code() {
    let out = bin()
        .args(["rootdata", "--type", "Q", "--rank", "9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("usage"));
}

#[test]
fn conflicting_rank_exits_with_usage_code() {
    let out = bin()
        .args(["rootdata", "--type", "A2", "--rank", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn passing_report_exits_zero_and_out_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = bin()
        .args(["rootdata", "--type", "A2", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["pass"], serde_json::Value::Bool(true));
}

#[test]
fn projector_precondition_exits_two() {
    let out = bin()
        .args([
            "hecke", "projector", "--type", "A2", "--l", "7", "--t", "3", "--weight", "1,2",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
