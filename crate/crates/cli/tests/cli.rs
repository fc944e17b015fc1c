use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn polyfault(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyfault")).args(args).output().unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_polyfault"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_four_by_twelve_faultfree() {
    let out = polyfault(&["count", "--rows", "4", "--cols", "12", "--faultfree", "--method", "dp"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["count"], "48");
}

#[test]
fn count_three_rows_has_no_faultfree_tiling() {
    let out = polyfault(&["count", "--rows", "3", "--cols", "6", "--faultfree"]);
    assert_eq!(json(&out)["count"], "0");
}

#[test]
fn count_methods_agree() {
    let dp = polyfault(&["count", "--rows", "6", "--cols", "6"]);
    let en = polyfault(&["count", "--rows", "6", "--cols", "6", "--method", "enumerate"]);
    assert_eq!(json(&dp)["count"], json(&en)["count"]);
    let dom = polyfault(&["count", "--rows", "8", "--cols", "8", "--domino"]);
    assert_eq!(json(&dom)["count"], "12988816");
}

#[test]
fn series_term() {
    let out = polyfault(&["series", "--family", "5x3t", "--t", "6"]);
    let v = json(&out);
    assert_eq!(v["value"], "163968");
    assert_eq!(v["kind"], "exact");
    assert_eq!(v["family"], "5x3t");
}

#[test]
fn enumerate_limit_and_order() {
    let out = polyfault(&["enumerate", "--rows", "2", "--cols", "6"]);
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 4);
    let limited = polyfault(&["enumerate", "--rows", "2", "--cols", "6", "--limit", "2"]);
    assert_eq!(stdout(&limited).lines().collect::<Vec<_>>(), lines[..2].iter().map(String::as_str).collect::<Vec<_>>());
}

#[test]
fn construct_analyze_render_chain() {
    let built = polyfault(&["construct", "--rows", "12", "--cols", "12", "--min-crossing"]);
    assert!(built.status.success());
    let tiling = stdout(&built);
    let analysis = json(&with_stdin(&["analyze", "--input", "-"], &tiling));
    assert_eq!(analysis["fault_lines"], Value::Array(vec![]));
    assert!(analysis["h_crossing_number"].as_u64().unwrap() <= 2);
    assert!(analysis["v_crossing_number"].as_u64().unwrap() <= 2);

    let ascii = stdout(&with_stdin(&["render", "--input", "-"], &tiling));
    let rows: Vec<&str> = ascii.lines().collect();
    assert_eq!(rows.len(), 12);
    let letters: std::collections::HashSet<char> = ascii.chars().filter(|c| !c.is_whitespace()).collect();
    assert_eq!(letters.len(), 48);

    let svg = stdout(&with_stdin(&["render", "--input", "-", "--format", "svg"], &tiling));
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<rect").count(), 144);
}

#[test]
fn analyze_reports_faults() {
    let doc = r#"{"rows":2,"cols":6,"pieces":[{"r":1,"c":4,"missing":"TR"},{"r":1,"c":1,"missing":"TR"},{"r":1,"c":2,"missing":"BL"},{"r":1,"c":5,"missing":"BL"}]}"#;
    let v = json(&with_stdin(&["analyze", "--input", "-"], doc));
    assert_eq!(v["fault_lines"], serde_json::json!([["v", 4]]));
    assert_eq!(v["v_crossing_number"], 0);
}

#[test]
fn output_is_deterministic() {
    let a = polyfault(&["construct", "--rows", "10", "--cols", "9"]);
    let b = polyfault(&["construct", "--rows", "10", "--cols", "9"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn argument_errors_exit_2_with_json() {
    for args in [
        &["count", "--rows", "0", "--cols", "3"][..],
        &["series", "--family", "9x9t", "--t", "2"],
        &["series", "--family", "4x3t", "--t", "1"],
        &["count", "--rows", "4"],
        &["construct", "--rows", "3", "--cols", "6"],
        &["analyze", "--input", "/nonexistent/tiling.json"],
        &["frobnicate"],
    ] {
        let out = polyfault(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert!(err["message"].is_string(), "{args:?}");
    }
}

#[test]
fn bad_thread_setting_is_rejected() {
    let out = Command::new(env!("CARGO_BIN_EXE_polyfault"))
        .args(["count", "--rows", "2", "--cols", "3"])
        .env("POLYFAULT_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let ok = Command::new(env!("CARGO_BIN_EXE_polyfault"))
        .args(["count", "--rows", "6", "--cols", "6", "--method", "enumerate"])
        .env("POLYFAULT_THREADS", "1")
        .output()
        .unwrap();
    assert!(ok.status.success());
}

#[test]
fn verify_exit_code_follows_the_report() {
    let out = polyfault(&["verify", "--suite", "quick"]);
    let report = json(&out);
    let checks = report["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    let any_fail = checks.iter().any(|c| c["status"] == "fail");
    assert_eq!(out.status.code(), Some(if any_fail { 1 } else { 0 }));
    assert!(checks.iter().any(|c| c["status"] == "skipped"));
}
