//! End-to-end tests of the `hookcontent` binary: output bytes, exit codes,
//! formats, and suite reproducibility.

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookcontent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn show_hooks_exact_bytes() {
    let output = run(&["show", "--lambda", "7,5,4,1", "--what", "hooks"]);
    assert_eq!(output.status.code(), Some(0));
    let expected = "\
12 11  8  7  5  4  1
    9  6  5  3  2
       5  4  2  1
          1
";
    assert_eq!(stdout(&output), expected);
}

#[test]
fn show_contents_exact_bytes() {
    let output = run(&["show", "--lambda", "7,5,4,1", "--what", "contents"]);
    assert_eq!(output.status.code(), Some(0));
    let expected = "\
1 2 3 4 5 6 7
  1 2 3 4 5
    1 2 3 4
      1
";
    assert_eq!(stdout(&output), expected);
}

#[test]
fn show_corners_lists_profile() {
    let output = run(&["show", "--lambda", "7,5,4,1", "--what", "corners"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("y: 1,4,7"), "{text}");
    assert!(text.contains("x: 1,2,6,8"), "{text}");
}

#[test]
fn show_q_prints_power_sums() {
    let output = run(&["show", "--lambda", "7,5,4,1", "--what", "q", "--k-max", "2"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "q_0 = 1\nq_1 = 17\nq_2 = 533\n");
}

#[test]
fn show_rejects_non_strict_lambda() {
    let output = run(&["show", "--lambda", "5,5", "--what", "hooks"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("strictly decreasing"));
}

#[test]
fn verify_normalization_json() {
    let output = run(&[
        "verify",
        "--identity",
        "normalization",
        "--n",
        "0..6",
        "--format",
        "json",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 1);
    let report: serde_json::Value = serde_json::from_str(text.trim()).expect("valid json");
    assert_eq!(report["identity"], "normalization");
    assert_eq!(report["params"]["n"], "0..6");
    assert_eq!(report["pass"], true);
    let rows = report["rows"].as_array().expect("rows array");
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[3]["n"], 3);
    assert_eq!(rows[3]["lhs"], "6");
    assert_eq!(rows[3]["rhs"], "6");
    assert_eq!(rows[3]["pass"], true);
}

#[test]
fn verify_unknown_identity_is_usage_error() {
    let output = run(&["verify", "--identity", "nope"]);
    assert_eq!(output.status.code(), Some(2));
    let text = stderr(&output);
    assert!(text.contains("nope"), "{text}");
    assert!(text.contains("normalization"), "{text}");
}

#[test]
fn verify_short_poly_detect_fails_with_exit_one() {
    // Five sample values are too few to certify a cubic: the check reports
    // failing rows and the process exits 1.
    let output = run(&["verify", "--identity", "poly-detect", "--n", "0..4"]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout(&output);
    assert!(text.contains("result: FAIL"), "{text}");
    assert!(text.contains("rhs=-"), "{text}");
}

#[test]
fn verify_skew_hook_csv() {
    let output = run(&[
        "verify",
        "--identity",
        "skew-hook",
        "--mu",
        "2,1",
        "--n",
        "0..2",
        "--format",
        "csv",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let expected = "\
identity,params,n,lhs,rhs,pass
skew-hook,\"mu=2,1 n=0..2\",0,1/6,1/6,true
skew-hook,\"mu=2,1 n=0..2\",1,1/6,1/6,true
skew-hook,\"mu=2,1 n=0..2\",2,1/6,1/6,true
";
    assert_eq!(stdout(&output), expected);
}

#[test]
fn suite_from_config_is_reproducible() {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    write!(
        file,
        "seed = 9\n\
         identity = skew-hook\n\
         mu = 3,1\n\
         n = 0..5\n\
         identity = pf-reconstruction\n\
         count = 8\n\
         k-max = 4\n"
    )
    .expect("write config");
    let path = file.path().to_str().expect("utf-8 path");

    let first = run(&["suite", "--config", path, "--format", "json"]);
    assert_eq!(first.status.code(), Some(0));
    let second = run(&["suite", "--config", path, "--format", "json"]);
    assert_eq!(first.stdout, second.stdout, "stdout must be byte-identical");

    let text = stdout(&first);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    let pf: serde_json::Value = serde_json::from_str(lines[1]).expect("valid json");
    assert_eq!(pf["identity"], "pf-reconstruction");
    assert_eq!(pf["params"]["seed"], "9");
    assert_eq!(pf["rows"].as_array().expect("rows").len(), 8);
}

#[test]
fn suite_rejects_unknown_config_key() {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    write!(file, "identity = normalization\nwobble = 2\n").expect("write config");
    let path = file.path().to_str().expect("utf-8 path");

    let output = run(&["suite", "--config", path]);
    assert_eq!(output.status.code(), Some(2));
    let text = stderr(&output);
    assert!(text.contains("line 2"), "{text}");
    assert!(text.contains("wobble"), "{text}");
}

#[test]
fn timing_goes_to_stderr_not_stdout() {
    let output = run(&[
        "verify",
        "--identity",
        "skew-hook",
        "--n",
        "0..2",
        "--format",
        "text",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(!stdout(&output).contains("finished in"));
    assert!(stderr(&output).contains("finished in"));
}
