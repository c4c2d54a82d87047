//! End-to-end checks of the installed binary: exit codes, JSON shape, and
//! byte-for-byte determinism.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn cospec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cospec")).args(args).output().unwrap()
}

fn cospec_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cospec"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn analyze_pins_the_triangle() {
    let out = cospec(&["analyze", "Bw"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.starts_with("{\"v\":\"v1\""), "schema version must lead: {text}");
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["graph"], "Bw");
    assert_eq!(v["n"], 3);
    assert_eq!(v["edges"], 3);
    assert_eq!(v["char_poly"], "x^3 - 3*x - 2");
    assert_eq!(v["controllable"], false);
}

#[test]
fn single_vertex_is_a_literal_not_a_file() {
    let out = cospec(&["analyze", "@"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["n"], 1);
    assert_eq!(v["controllable"], true);
}

#[test]
fn reads_graphs_from_stdin_and_files() {
    let from_stdin = cospec_stdin(&["analyze", "-"], "Bw\n");
    assert_eq!(from_stdin.status.code(), Some(0));

    let dir = env!("CARGO_TARGET_TMPDIR");
    let path = format!("{dir}/triangle.g6");
    std::fs::write(&path, "Bw\n").unwrap();
    let from_file = cospec(&["analyze", &format!("@{path}")]);
    assert_eq!(from_file.status.code(), Some(0));

    assert_eq!(stdout_of(&from_stdin), stdout_of(&from_file));
}

#[test]
fn malformed_records_exit_two_with_an_offset() {
    let out = cospec(&["analyze", "B\u{19}w"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_of(&out).is_empty());
    let err = stderr_of(&out);
    assert!(err.contains("offset 1"), "missing offset in: {err}");
}

#[test]
fn unknown_generator_parameters_exit_two() {
    // Quadratic residues only form a graph when q = 1 mod 4.
    let out = cospec(&["generate", "paley:12"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_emits_plain_records() {
    let out = cospec(&["generate", "cycle:6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "EhEG\n");
}

#[test]
fn compare_separates_the_triangles_from_the_hexagon() {
    let out = cospec(&["compare", "EwCW", "EhEG"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["c2"], true);
    assert_eq!(v["c3"], false);
    assert_eq!(v["cospectral"], false);
    assert_eq!(v["generalized_cospectral"], false);
    assert_eq!(v["walk_equivalent"], true);
    assert_eq!(v["isomorphic"], false);
}

#[test]
fn equiv_reports_each_logic() {
    let c2 = cospec(&["equiv", "--logic", "c2", "EwCW", "EhEG"]);
    assert_eq!(c2.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&c2)).unwrap();
    assert_eq!(v["equivalent"], true);

    let c3 = cospec(&["equiv", "--logic", "c3", "EwCW", "EhEG"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&c3)).unwrap();
    assert_eq!(v["equivalent"], false);
}

#[test]
fn eval_binds_free_variables() {
    let out = cospec(&["eval", "--formula", "E(x,y)", "--graph", "Bw", "--bind", "x=0", "--bind", "y=1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["value"], true);

    let missing = cospec(&["eval", "--formula", "E(x,y)", "--graph", "Bw", "--bind", "x=0"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn enumerate_counts_the_census() {
    let out = cospec(&["enumerate", "--n", "5", "--count-only"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["count"], 34);

    let listing = cospec(&["enumerate", "--n", "4"]);
    assert_eq!(listing.status.code(), Some(0));
    assert_eq!(stdout_of(&listing).lines().count(), 11);
}

#[test]
fn pebble_reports_spoiler_moves() {
    let out = cospec(&["pebble", "EwCW", "EhEG", "--pebbles", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["winner"], "spoiler");
    assert!(!v["spoiler_moves"].as_array().unwrap().is_empty());

    let tied = cospec(&["pebble", "EwCW", "EhEG", "--pebbles", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&tied)).unwrap();
    assert_eq!(v["winner"], "duplicator");
}

#[test]
fn verify_passes_and_is_byte_identical() {
    let first = cospec(&["verify", "thm6"]);
    assert_eq!(first.status.code(), Some(0), "{}", stderr_of(&first));
    let second = cospec(&["verify", "thm6"]);
    assert_eq!(first.stdout, second.stdout, "stdout must be deterministic");

    let text = stdout_of(&first);
    for line in text.lines() {
        let parsed: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(parsed["v"], "v1", "bad suite line: {line}");
    }
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["type"], "summary");
    assert_eq!(last["pass"], true);
}

#[test]
fn verify_exits_one_when_a_suite_cannot_confirm() {
    // Restricting the search to six vertices leaves the suite without its
    // seven-vertex witness pair: honest failure, exit code one.
    let out = cospec(&["verify", "fig1", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_of(&out);
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["pass"], false);
}

#[test]
fn verify_rejects_unknown_suites() {
    let out = cospec(&["verify", "thm99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn timing_never_contaminates_stdout() {
    let out = cospec(&["verify", "lem2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout_of(&out).contains("finished in"));
    assert!(stderr_of(&out).contains("finished in"));
}

#[test]
fn pretty_output_is_for_humans() {
    let out = cospec(&["analyze", "Bw", "--pretty"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(!text.starts_with("{"), "pretty output should not be JSON: {text}");
    assert!(text.contains("Bw"));
}

#[test]
fn usage_errors_exit_two() {
    let out = cospec(&["analyze"]);
    assert_eq!(out.status.code(), Some(2));
    let nocmd = cospec(&["frobnicate"]);
    assert_eq!(nocmd.status.code(), Some(2));
}
