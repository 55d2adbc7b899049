use std::fs::OpenOptions;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn g3bell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g3bell"))
        .args(args)
        .output()
        .expect("spawn g3bell")
}

const FAST: [&str; 2] = ["--trials", "200"];

#[test]
fn default_run_confirms_everything() {
    let out = g3bell(&FAST);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("directed measure normalizes to trivector: confirmed"));
}

#[test]
fn json_output_parses_and_is_deterministic() {
    let args = ["--format", "json", "--trials", "500", "--seed", "9"];
    let first = g3bell(&args);
    let second = g3bell(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["normalization"]["directed_total"], 1.0);
    assert_eq!(v["config"]["seed"], 9);
}

#[test]
fn flags_reach_the_report() {
    let out = g3bell(&[
        "--format",
        "json",
        "--trials",
        "100",
        "--tol",
        "1e-10",
        "--p-step",
        "0.25",
        "--angles",
        "0,-90,45,-45",
        "--pair",
        "0,0,1:0.6,0,0.8",
        "--pair",
        "0,1,0:0,-1,0",
        "--axis",
        "1,0,0",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["p_grid"].as_array().unwrap().len(), 5);
    assert_eq!(v["config"]["angles"][1], -90.0);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 5);
    assert_eq!(v["pairs"][4]["class"], "parallel");
    assert_eq!(v["config"]["axis"][0], 1.0);
}

#[test]
fn degenerate_tolerance_exits_one() {
    let out = g3bell(&["--tol", "10", "--trials", "10"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("directed measure normalizes to trivector: informational"));
}

#[test]
fn invalid_configuration_exits_two() {
    for args in [
        vec!["--tol", "0"],
        vec!["--tol", "-1"],
        vec!["--p-step", "0"],
        vec!["--p-step", "2"],
        vec!["--trials", "0"],
        vec!["--angles", "0,90,45"],
        vec!["--pair", "1,1,0:1,0,0"],
        vec!["--pair", "1,0,0"],
        vec!["--format", "yaml"],
        vec!["--no-such-flag"],
    ] {
        let out = g3bell(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn write_failure_exits_three() {
    if !Path::new("/dev/full").exists() {
        return;
    }
    let full = OpenOptions::new().write(true).open("/dev/full").unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_g3bell"))
        .args(FAST)
        .stdout(Stdio::from(full))
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(3));
}
