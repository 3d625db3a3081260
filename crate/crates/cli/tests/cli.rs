//! End-to-end behavior of the `rowmotion` binary: output values, exit
//! codes, and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rowmotion"))
}

fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/primes_2x3.json")
}

fn run(args: &[&str]) -> Output {
    let mut cmd = binary();
    cmd.args(args);
    cmd.output().expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("rowmotion-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("temp file");
    path
}

#[test]
fn orbit_at_the_worked_example() {
    let fixture = fixture();
    let output = run(&[
        "orbit",
        "--labels",
        fixture.to_str().unwrap(),
        "--power",
        "-2",
        "--cell",
        "2,2",
    ]);
    assert!(output.status.success());
    let value = stdout_json(&output);
    assert_eq!(value["closed_form"], "1/10");
    assert_eq!(value["toggle"], "1/10");
    assert_eq!(value["agree"], true);
}

#[test]
fn orbit_full_labeling_routes_agree() {
    let fixture = fixture();
    let output = run(&["orbit", "--labels", fixture.to_str().unwrap(), "--power", "3"]);
    assert!(output.status.success());
    let value = stdout_json(&output);
    assert_eq!(value["agree"], true);
    assert_eq!(value["closed_form"]["2,2"], "1/10");
    assert_eq!(value["closed_form"], value["toggle"]);
}

#[test]
fn stword_row_one_is_the_classic_word() {
    let fixture = fixture();
    let output = run(&["stword", "--labels", fixture.to_str().unwrap(), "--row", "1"]);
    assert!(output.status.success());
    let value = stdout_json(&output);
    assert_eq!(value["kind"], "ST_i");
    assert_eq!(value["i"], 1);
    assert_eq!(
        value["entries"],
        serde_json::json!(["110", "273", "1/6", "1/35", "1/143"])
    );
}

#[test]
fn stword_column_word() {
    let fixture = fixture();
    let output = run(&["stword", "--labels", fixture.to_str().unwrap(), "--col", "2"]);
    assert!(output.status.success());
    let value = stdout_json(&output);
    assert_eq!(value["kind"], "STbar_j");
    assert_eq!(value["j"], 2);
}

#[test]
fn greene_and_shift_pass_on_the_fixture() {
    let fixture = fixture();
    for sub in ["greene", "shift"] {
        let output = run(&[sub, "--labels", fixture.to_str().unwrap()]);
        assert!(output.status.success(), "{sub} failed");
        assert_eq!(stdout_json(&output)["passed"], true);
    }
}

#[test]
fn rsk_tropical_accepts_any_rationals() {
    let path = temp_file(
        "tropical.json",
        r#"{"r":2,"s":2,"labels":{"1,1":"-1/2","1,2":"0","2,1":"1/3","2,2":"2"}}"#,
    );
    let output = run(&["rsk", "--labels", path.to_str().unwrap(), "--tropical"]);
    assert!(output.status.success());
    let value = stdout_json(&output);
    assert_eq!(value["algebra"], "tropical");
    assert_eq!(value["routes_agree"], true);
    // The same input is a usage error for the birational run.
    let output = run(&["rsk", "--labels", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn sums_then_reconstruct_round_trips() {
    let fixture = fixture();
    let sums = run(&["sums", "--labels", fixture.to_str().unwrap()]);
    assert!(sums.status.success());
    let path = temp_file("sums.json", std::str::from_utf8(&sums.stdout).unwrap());
    let output = run(&["reconstruct", "--sums", path.to_str().unwrap()]);
    assert!(output.status.success());
    let value = stdout_json(&output);
    assert_eq!(value["labels"]["1,1"], "2");
    assert_eq!(value["labels"]["2,3"], "13");
}

#[test]
fn minors_dump_contains_frozen_entries() {
    let fixture = fixture();
    let output = run(&["minors", "--labels", fixture.to_str().unwrap()]);
    assert!(output.status.success());
    let value = stdout_json(&output);
    assert_eq!(value["entries"]["2,3,2"], "37/385");
    assert_eq!(value["entries"]["1,3,3"], "1/30030");
}

#[test]
fn paths_enumeration_matches_minor_quotient() {
    let fixture = fixture();
    let output = run(&[
        "paths",
        "--labels",
        fixture.to_str().unwrap(),
        "--interval",
        "1,2,2,3",
        "--k",
        "1",
    ]);
    assert!(output.status.success());
    let value = stdout_json(&output);
    assert_eq!(value["total"], "1170");
    assert_eq!(value["minor_quotient"], "1170");
}

#[test]
fn verify_small_run_passes_and_filters() {
    let output = run(&[
        "verify", "--r-max", "2", "--s-max", "2", "--trials", "2", "--seed", "7", "--suite",
        "octahedron", "--suite", "worked_example",
    ]);
    assert!(output.status.success());
    let value = stdout_json(&output);
    assert_eq!(value["all_passed"], true);
    let names: Vec<&str> = value["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["worked_example", "octahedron"]);
}

#[test]
fn usage_errors_exit_with_two() {
    let garbage = temp_file("garbage.json", "{ not json");
    let nonpositive = temp_file(
        "nonpositive.json",
        r#"{"r":1,"s":1,"labels":{"1,1":"-2"}}"#,
    );
    let primes = fixture();
    let cases: Vec<Vec<&str>> = vec![
        vec!["orbit", "--labels", garbage.to_str().unwrap(), "--power", "1"],
        vec!["orbit", "--labels", nonpositive.to_str().unwrap(), "--power", "1"],
        vec![
            "orbit",
            "--labels",
            primes.to_str().unwrap(),
            "--power",
            "1",
            "--cell",
            "9,9",
        ],
        vec!["stword", "--labels", primes.to_str().unwrap(), "--row", "7"],
        vec!["stword", "--labels", primes.to_str().unwrap()],
        vec!["verify", "--suite", "nonexistent"],
        vec!["ideals", "--r", "0", "--s", "2"],
        vec!["ideals", "--r", "8", "--s", "8"],
    ];
    for args in cases {
        let fixture_args = args.clone();
        let output = run(&args);
        assert_eq!(
            output.status.code(),
            Some(2),
            "expected usage error for {fixture_args:?}"
        );
        assert!(!output.stderr.is_empty(), "diagnostic on stderr for {fixture_args:?}");
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let fixture = fixture();
    let first = run(&["rsk", "--labels", fixture.to_str().unwrap()]);
    let second = run(&["rsk", "--labels", fixture.to_str().unwrap()]);
    assert_eq!(first.stdout, second.stdout);
    let first = run(&[
        "verify", "--r-max", "2", "--s-max", "3", "--trials", "2", "--seed", "11", "--suite",
        "periodicity",
    ]);
    let second = run(&[
        "verify", "--r-max", "2", "--s-max", "3", "--trials", "2", "--seed", "11", "--suite",
        "periodicity",
    ]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn ideals_orbit_table() {
    let output = run(&["ideals", "--r", "2", "--s", "3"]);
    assert!(output.status.success());
    let value = stdout_json(&output);
    assert_eq!(value["ideal_count"], 10);
    assert_eq!(value["rowmotion_order"], 5);
    let total: usize = value["orbits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["length"].as_u64().unwrap() as usize)
        .sum();
    assert_eq!(total, 10);
}
