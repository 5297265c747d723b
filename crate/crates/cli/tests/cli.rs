//! End-to-end checks of the CLI contract: exit codes, determinism of data
//! rows, and manifest round-tripping.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ellnorm"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

/// Data rows only: everything that is not a '#' comment.
fn data_rows(stdout: &[u8]) -> Vec<String> {
    String::from_utf8_lossy(stdout)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

#[test]
fn ineq_small_campaign_exits_zero() {
    let out = run(&["ineq", "--name", "log_bound", "--trials", "3", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(data_rows(&out.stdout).len(), 3);
}

#[test]
fn ineq_zero_trials_is_usage_error() {
    let out = run(&["ineq", "--name", "log_bound", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = run(&["ineq", "--name", "log_bound", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ineq_data_rows_are_byte_identical_across_runs() {
    let args = ["ineq", "--name", "all", "--trials", "200", "--seed", "9", "--dim", "5"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(data_rows(&a.stdout), data_rows(&b.stdout));
}

#[test]
fn manifest_recorded_args_reproduce_the_data_section() {
    let out = run(&["direction", "--dim", "2", "--samples", "1000", "--seed", "3", "--trials", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    let args_line = text
        .lines()
        .find(|l| l.starts_with("# args: "))
        .expect("manifest records args")
        .trim_start_matches("# args: ")
        .to_string();
    let recorded: Vec<&str> = args_line.split_whitespace().collect();
    let mut rerun_args = vec!["direction"];
    rerun_args.extend(recorded);
    let rerun = run(&rerun_args);
    assert_eq!(data_rows(&out.stdout), data_rows(&rerun.stdout));
}

#[test]
fn direction_rejects_uncalibrated_dimension() {
    let out = run(&["direction", "--dim", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn direction_oracle_column_never_beats_closed_form() {
    let out = run(&["direction", "--dim", "2", "--samples", "2000", "--seed", "1", "--trials", "10"]);
    assert_eq!(out.status.code(), Some(0));
    for row in data_rows(&out.stdout) {
        let cols: Vec<f64> = row.split(',').map(|c| c.parse().unwrap()).collect();
        let (closed, oracle) = (cols[1], cols[2]);
        assert!(oracle >= closed - 1e-12 * closed.abs(), "row: {row}");
    }
}

#[test]
fn optimize_sphere_sd_converges_in_one_step() {
    let out = run(&["optimize", "--function", "sphere", "--method", "sd", "--x0", "3,4"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = data_rows(&out.stdout);
    assert_eq!(rows.len(), 2); // start record + converged record
    assert!(rows[0].ends_with(",1,")); // alpha = 1, no secant column for sd
}

#[test]
fn optimize_rosenbrock_qn_exits_zero() {
    let out = run(&["optimize", "--function", "rosenbrock", "--method", "qn", "--x0", "-1.2,1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("# termination: grad_tolerance_met"));
}

#[test]
fn optimize_rosenbrock_sd_hits_iteration_cap() {
    let out = run(&[
        "optimize", "--function", "rosenbrock", "--method", "sd", "--x0", "-1.2,1",
        "--max-iter", "100",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn optimize_rejects_bad_start_point() {
    let out = run(&["optimize", "--function", "rosenbrock", "--method", "qn", "--x0", "1,2,3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["optimize", "--function", "sphere", "--method", "sd", "--x0", "abc"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn plot_lemma1_rejects_invalid_range() {
    let out = run(&["plot-lemma1", "--xmin", "2", "--xmax", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["plot-lemma1", "--xmin", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn plot_lemma1_known_rows() {
    // grid of step 0.25 hits x = 1 exactly; e is checked separately
    let out = run(&["plot-lemma1", "--xmin", "0.25", "--xmax", "4", "--points", "16"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = data_rows(&out.stdout);
    let at_one = rows.iter().find(|r| r.starts_with("1\t")).expect("x = 1 on grid");
    assert_eq!(at_one, "1\t0\t0");

    let e = std::f64::consts::E;
    let out = run(&["plot-lemma1", "--xmin", &e.to_string(), "--xmax", "4", "--points", "3"]);
    let rows = data_rows(&out.stdout);
    let cols: Vec<f64> = rows[0].split('\t').map(|c| c.parse().unwrap()).collect();
    assert_eq!(cols[1], e - 1.0);
    assert!((cols[2] - 1.0).abs() <= 1e-15);
}

#[test]
fn out_flag_writes_file_instead_of_stdout() {
    let dir = std::env::temp_dir().join("ellnorm-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("plot.tsv");
    let out = run(&["plot-lemma1", "--points", "10", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.lines().filter(|l| !l.starts_with('#')).count() == 10);
    std::fs::remove_file(path).ok();
}
