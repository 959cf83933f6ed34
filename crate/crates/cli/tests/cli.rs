use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn heterotree(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heterotree"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn formula_prints_t_and_value() {
    let dir = tempfile::tempdir().unwrap();
    let o = heterotree(&["formula", "6", "5"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "t=3 value=2\n");
    let o = heterotree(&["formula", "5", "1"], dir.path());
    assert_eq!(stdout(&o), "t=- value=3\n");
}

#[test]
fn config_is_echoed_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let o = heterotree(&["formula", "4", "3"], dir.path());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("Formula { n: 4, r: 3 }"), "{err}");
}

#[test]
fn canonical_then_solve_and_construct() {
    let dir = tempfile::tempdir().unwrap();
    let o = heterotree(&["canonical", "4", "3", "-o", "c.txt", "--partition", "p.txt"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let p = fs::read_to_string(dir.path().join("p.txt")).unwrap();
    assert_eq!(p.lines().filter(|l| l.starts_with("tree")).count(), 1);

    let o = heterotree(&["solve", "c.txt", "--partition", "s.txt"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "count=1\n");
    assert!(dir.path().join("s.txt").exists());

    let o = heterotree(&["construct", "c.txt"], dir.path());
    assert_eq!(stdout(&o), "count=1 bound=1\n");
}

#[test]
fn canonical_value_matches_formula() {
    let dir = tempfile::tempdir().unwrap();
    heterotree(&["canonical", "8", "5", "-o", "c.txt"], dir.path());
    let o = heterotree(&["solve", "c.txt"], dir.path());
    assert_eq!(stdout(&o), "count=3\n");
}

#[test]
fn merge_reduces_color_count() {
    let dir = tempfile::tempdir().unwrap();
    heterotree(&["canonical", "5", "4", "-o", "c.txt"], dir.path());
    let o = heterotree(&["merge", "c.txt", "4", "1"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("5 3\n"));
}

#[test]
fn malformed_file_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.txt"), "3 2\n0 1 1\n0 2 x\n").unwrap();
    let o = heterotree(&["solve", "bad.txt"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(heterotree(&["bogus"], dir.path()).status.code(), Some(1));
    assert_eq!(heterotree(&["formula", "3", "9"], dir.path()).status.code(), Some(1));
    assert_eq!(heterotree(&["--help"], dir.path()).status.code(), Some(0));
}

#[test]
fn guard_exceeded_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    heterotree(&["canonical", "9", "4", "-o", "c.txt"], dir.path());
    let o = heterotree(&["solve", "c.txt", "--max-n", "8"], dir.path());
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_cutedge_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = heterotree(&["verify", "cutedge", "--max-n", "6", "--report", "r.txt"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result PASS"));
    let report = fs::read_to_string(dir.path().join("r.txt")).unwrap();
    assert!(report.contains("campaign cutedge"));
}

#[test]
fn verify_json_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "verify", "theorem1", "--max-n", "6", "--samples", "20", "--seed", "7", "--format", "json",
    ];
    let a = heterotree(&args, dir.path());
    let b = heterotree(&args, dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("\"passed\": true"));
}

#[test]
fn verify_constructive_and_monotonicity_pass() {
    let dir = tempfile::tempdir().unwrap();
    let o = heterotree(&["verify", "constructive", "--max-n", "7", "--samples", "20"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let o = heterotree(&["verify", "monotonicity", "--samples", "50", "--max-n", "6"], dir.path());
    assert_eq!(o.status.code(), Some(0));
}
