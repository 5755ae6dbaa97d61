//! End-to-end tests of the compiled binary: exit codes, JSON contracts,
//! and the serial/parallel batch determinism guarantee.

use std::path::Path;
use std::process::{Command, Output};

use eigenstrata_cli::report::AnalysisReport;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_eigenstrata"))
}

fn write(dir: &Path, name: &str, contents: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str], cwd: &Path) -> Output {
    bin().args(args).current_dir(cwd).output().unwrap()
}

#[test]
fn analyze_csv_reports_the_expected_classification() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "m.csv", "2,1\n1,2\n");
    let out = run(&["analyze", "m.csv", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report: AnalysisReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.schema, 1);
    assert_eq!(report.eigenvalues, vec![1.0, 3.0]);
    assert_eq!(report.normalized_eigenvalues, vec![0.0, 1.0]);
    assert_eq!(report.partition, vec![1, 1]);
    assert_eq!(report.codim, 0);
    assert_eq!(report.frame, None);
}

#[test]
fn analyze_degenerate_exits_two_with_typed_error() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "ident.csv", "1,0,0\n0,1,0\n0,0,1\n");
    let out = run(&["analyze", "ident.csv", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["kind"], "error");
    assert_eq!(v["error"]["code"], "degenerate_form");
}

#[test]
fn analyze_repeated_eigenvalues_matches_the_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "d.csv", "0,0,0\n0,0,0\n0,0,1\n");
    let out = run(&["analyze", "d.csv", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report: AnalysisReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.partition, vec![2, 1]);
    assert_eq!(report.codim, 2);
    assert_eq!(report.simplex_point, vec![0.0, 1.0]);
    assert_eq!(report.normalizer_order, "16");
    assert_eq!(report.cell, vec![vec![1, 2], vec![3]]);
}

#[test]
fn analyze_parse_error_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "bad.csv", "1,2\n3,oops\n");
    let out = run(&["analyze", "bad.csv", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["code"], "parse_error");
}

#[test]
fn analyze_asymmetric_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "asym.csv", "1,2\n3,4\n");
    let out = run(&["analyze", "asym.csv", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["code"], "not_symmetric");
}

#[test]
fn analyze_phylip_keeps_names_and_frame_flag_works() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "d.phy", "3\nA 0 1 2\nB 1 0 1\nC 2 1 0\n");
    let out = run(&["analyze", "d.phy", "--json", "--frame"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report: AnalysisReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        report.input.names,
        Some(vec!["A".into(), "B".into(), "C".into()])
    );
    assert_eq!(report.input.format, "phylip");
    let frame = report.frame.expect("frame requested");
    assert_eq!(frame.len(), 3);
}

#[test]
fn enumerate_tiling_json_uses_the_documented_keys() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["enumerate", "tiling", "4", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["chambers"], 24);
    assert_eq!(v["tiles_M"], 12);
    assert_eq!(v["tiles_OM"], 24);
}

#[test]
fn enumerate_out_of_range_exits_one_and_names_the_bound() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["enumerate", "coxeter", "99"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("[3, 8]"), "bound must be stated: {stderr}");
}

#[test]
fn enumerate_face_listing_is_available() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &["enumerate", "associahedron", "4", "2", "--json"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["faces"]["count"], 5); // pentagon vertices
}

#[test]
fn batch_parallel_output_is_byte_identical_to_serial() {
    let dir = tempfile::tempdir().unwrap();
    for k in 0..12 {
        let v = k as f64;
        write(
            dir.path(),
            &format!("m{k:02}.csv"),
            &format!("{v},1,0\n1,{},2\n0,2,{}\n", v * 0.5 - 1.0, v + 2.0),
        );
    }
    write(dir.path(), "degenerate.csv", "3,0\n0,3\n");
    let serial = run(&["batch", ".", "--json"], dir.path());
    let parallel = run(&["batch", ".", "--json", "--parallel", "4"], dir.path());
    assert_eq!(serial.status.code(), Some(2)); // one degenerate input
    assert_eq!(parallel.status.code(), Some(2));
    assert_eq!(
        serial.stdout, parallel.stdout,
        "batch output must be deterministic"
    );
    assert!(!serial.stdout.is_empty());

    // one record per input, reports and errors both present
    let lines: Vec<&[u8]> = serial
        .stdout
        .split(|&b| b == b'\n')
        .filter(|l| !l.is_empty())
        .collect();
    assert_eq!(lines.len(), 13);
}

#[test]
fn batch_of_empty_directory_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::create_dir(dir.path().join("empty")).unwrap();
    let out = run(&["batch", "empty"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("no inputs"));
}

#[test]
fn batch_mixed_failure_kinds_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "ok.csv", "2,1\n1,2\n");
    write(dir.path(), "bad.csv", "nope\n");
    let out = run(&["batch", "ok.csv", "bad.csv", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "m.csv", "2,1\n1,2\n");
    let out = run(
        &["analyze", "m.csv", "--json", "--out", "report.json"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(dir.path().join("report.json")).unwrap();
    let report: AnalysisReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report.partition, vec![1, 1]);
}

#[test]
fn json_reports_round_trip_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "m.csv", "0,0.25,0\n0.25,1,0.5\n0,0.5,2\n");
    let out = run(&["analyze", "m.csv", "--json", "--frame"], dir.path());
    let report: AnalysisReport = serde_json::from_slice(&out.stdout).unwrap();
    let re_serialized = serde_json::to_string(&report).unwrap();
    let re_parsed: AnalysisReport = serde_json::from_str(&re_serialized).unwrap();
    assert_eq!(report, re_parsed);
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let usage = run(&["enumerate", "nonsense-kind", "4"], dir.path());
    assert_eq!(usage.status.code(), Some(1));
    let missing_value = run(&["batch", "x.csv", "--parallel"], dir.path());
    assert_eq!(missing_value.status.code(), Some(1));
    let help = run(&["--help"], dir.path());
    assert_eq!(help.status.code(), Some(0));
}

#[test]
fn negative_tolerance_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "m.csv", "2,1\n1,2\n");
    let out = run(&["analyze", "m.csv", "--tol=-1", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["code"], "usage_error");
}

#[test]
fn analyze_text_mode_shows_the_classification() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "d.csv", "0,0,0\n0,0,0\n0,0,1\n");
    let out = run(&["analyze", "d.csv"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("partition: 2+1"));
    assert!(text.contains("codim: 2"));
    assert!(text.contains("cell: ({1,2}|{3})"));
    assert!(text.contains("normalizer order: 16"));
    assert!(text.contains("warning: eigenvalue positions 1..2 clustered"));
}

#[test]
fn groupoid_demo_json_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = run(&["groupoid-demo", "--json"], dir.path());
    let b = run(&["groupoid-demo", "--json"], dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v[0]["morphisms"], 18);
    assert_eq!(v[0]["cardinality"], "1/2");
}
