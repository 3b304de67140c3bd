//! End-to-end checks of the `quiver-dt` binary: exit codes, report
//! determinism, and the documented input formats.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_quiver-dt")
}

fn write_file(dir: &Path, name: &str, content: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(content.as_bytes()).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

const ONE_LOOP: &str = r#"{"vertices": ["v"], "arrows": [["v", "v", 1]]}"#;
const ONE_ARROW: &str = r#"{"vertices": ["a", "b"], "arrows": [["a", "b", 1]], "theta": [1, -1]}"#;

#[test]
fn dt_command_on_one_loop() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "oneloop.json", ONE_LOOP);
    let out = run(&["dt", input.to_str().unwrap(), "--trunc", "6"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("L^(1/2)"), "stdout: {stdout}");
    assert!(stdout.contains("[PASS] integrality"), "stdout: {stdout}");
}

#[test]
fn json_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "onearrow.json", ONE_ARROW);
    let args = [
        "wallcross",
        input.to_str().unwrap(),
        "--trunc",
        "4",
        "--format",
        "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["command"], "wallcross");
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "reassembly" && c["pass"] == true));
}

#[test]
fn theta_flag_overrides_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(
        dir.path(),
        "plain.json",
        r#"{"vertices": ["a", "b"], "arrows": [["a", "b", 1]]}"#,
    );
    let out = run(&[
        "wallcross",
        input.to_str().unwrap(),
        "--trunc",
        "3",
        "--theta",
        "1,-1",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // 2: malformed input file
    let bad = write_file(dir.path(), "bad.json", "{ not json");
    let out = run(&["dt", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // 3: precondition violation (non-symmetric quiver for dt)
    let arrow = write_file(dir.path(), "arrow.json", ONE_ARROW);
    let out = run(&["dt", arrow.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    // 5: budget exceeded
    let loop2 = write_file(
        dir.path(),
        "loop2.json",
        r#"{"vertices": ["v"], "arrows": [["v", "v", 2]]}"#,
    );
    let rels = write_file(dir.path(), "rels.txt", "a0*a0*a1*a1 - a1*a0*a1*a0\n");
    let out = run(&[
        "count",
        loop2.to_str().unwrap(),
        "--trunc",
        "2",
        "--relations",
        rels.to_str().unwrap(),
        "--budget",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn framed_and_hilb_commands() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "oneloop.json", ONE_LOOP);
    let out = run(&[
        "hilb",
        input.to_str().unwrap(),
        "--trunc",
        "4",
        "--framing",
        "1",
        "--var",
        "q",
    ]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    // Hilbert scheme of points on the affine line: motives 1, q, q^2, ...
    assert!(stdout.contains("q^2"), "stdout: {stdout}");
    let out = run(&[
        "framed",
        input.to_str().unwrap(),
        "--trunc",
        "3",
        "--framing",
        "1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
}

#[test]
fn count_command_with_relations() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "oneloop.json", ONE_LOOP);
    let rels = write_file(dir.path(), "nilpotent.txt", "# square-zero loop\na0*a0\n");
    let out = run(&[
        "count",
        input.to_str().unwrap(),
        "--trunc",
        "2",
        "--relations",
        rels.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // d=2: square-zero matrices are counted by q^2
    let results = report["results"].as_array().unwrap();
    let d2 = results.iter().find(|r| r["dim"] == serde_json::json!([2])).unwrap();
    assert_eq!(d2["coeffs"], serde_json::json!([0, 0, 1]));
}

#[test]
fn selfcheck_passes() {
    let out = run(&["selfcheck"]);
    assert!(out.status.success(), "stdout: {}", String::from_utf8_lossy(&out.stdout));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("[PASS]"));
    assert!(!stdout.contains("[FAIL]"));
}
