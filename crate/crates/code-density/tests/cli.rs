//! End-to-end tests of the `code-density` binary: flags, exit codes, output
//! determinism, and file emission.

use std::process::{Command, Output};

use code_density::report::{OutputRecord, CSV_HEADER};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_code-density"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn bounds_worked_example() {
    let out = run(&[
        "bounds", "--metric", "hamming", "-q", "2", "-n", "3", "-d", "2", "-S", "3",
    ]);
    assert!(out.status.success());
    let record = OutputRecord::from_json(stdout(&out).trim()).unwrap();
    assert_eq!(record.upper.num, "8");
    assert_eq!(record.upper.den, "35");
    // Emitted JSON round-trips byte-identically.
    assert_eq!(record.to_json(), stdout(&out).trim());
}

#[test]
fn bounds_injection_collapses_at_size_two() {
    let out = run(&[
        "bounds", "--metric", "injection", "-q", "2", "-n", "4", "-k", "2", "-d", "2", "-S", "2",
    ]);
    assert!(out.status.success());
    let record = OutputRecord::from_json(stdout(&out).trim()).unwrap();
    assert_eq!(record.lower.num, "8");
    assert_eq!(record.lower.den, "17");
    assert_eq!(record.upper.num, "8");
}

#[test]
fn bounds_d1_gives_unit_interval() {
    let out = run(&[
        "bounds", "--metric", "hamming", "-q", "5", "-n", "3", "-d", "1", "-S", "7",
    ]);
    assert!(out.status.success());
    let record = OutputRecord::from_json(stdout(&out).trim()).unwrap();
    assert_eq!(record.lower.num, "1");
    assert_eq!(record.upper.num, "1");
    assert_eq!(record.upper.den, "1");
}

#[test]
fn exact_reports_sandwich() {
    let out = run(&[
        "exact", "--metric", "injection", "-q", "2", "-n", "4", "-k", "2", "-d", "2", "-S", "3",
    ]);
    assert!(out.status.success());
    let record = OutputRecord::from_json(stdout(&out).trim()).unwrap();
    assert_eq!(record.sandwich_ok, Some(true));
    let exact = record.exact_density.unwrap();
    assert_eq!((exact.num.as_str(), exact.den.as_str()), ("16", "187"));
}

#[test]
fn estimate_is_worker_count_independent() {
    let base = [
        "estimate", "--metric", "hamming", "-q", "2", "-n", "2", "-d", "2", "-S", "2",
        "--trials", "30000", "--seed", "7",
    ];
    let one = run(&[&base[..], &["--workers", "1"]].concat());
    let eight = run(&[&base[..], &["--workers", "8"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, eight.stdout, "outputs must be byte-identical");
    let record = OutputRecord::from_json(stdout(&one).trim()).unwrap();
    let est = record.estimate.unwrap();
    assert_eq!(est.trials, 30000);
    assert_eq!(est.seed, 7);
}

#[test]
fn estimate_rejects_zero_trials_with_usage_exit() {
    let out = run(&[
        "estimate", "--metric", "hamming", "-q", "2", "-n", "2", "-d", "2", "-S", "2",
        "--trials", "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_parameters_exit_2_with_diagnostic() {
    let out = run(&[
        "bounds", "--metric", "hamming", "-q", "2", "-n", "3", "-d", "5", "-S", "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("d"), "diagnostic names the constraint: {err}");

    let out = run(&[
        "bounds", "--metric", "injection", "-q", "6", "-n", "4", "-k", "2", "-d", "2", "-S", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("prime power"), "{err}");
}

#[test]
fn work_limit_exceedance_exits_3_and_hints_estimate() {
    let out = run(&[
        "exact", "--metric", "hamming", "-q", "2", "-n", "4", "-d", "2", "-S", "4",
        "--work-limit", "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("estimate"), "{err}");
}

#[test]
fn sweep_emits_csv_with_header_and_trend_summary() {
    let out = run(&[
        "sweep", "--metric", "hamming", "-n", "4", "-d", "3",
        "--q-list", "2,3,4,5,7,8,9,11,13,16",
        "--s-gamma-exp", "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), CSV_HEADER);
    assert_eq!(lines.count(), 10);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("trend:"), "{err}");
    assert!(err.contains("upper bound drops below 0.01 from q = 7"), "{err}");
}

#[test]
fn sweep_jsonl_rows_parse_as_records() {
    let out = run(&[
        "sweep", "--metric", "injection", "-n", "4", "-k", "2", "-d", "2",
        "--q-list", "2,3,4,5",
        "--s-list", "5,10,17,26",
        "--format", "jsonl",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let records: Vec<OutputRecord> = text
        .lines()
        .map(|l| OutputRecord::from_json(l).unwrap())
        .collect();
    assert_eq!(records.len(), 4);
    assert_eq!(records[0].size, "5");
    assert_eq!(records[3].q, 5);
}

#[test]
fn sweep_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = run(&[
        "sweep", "--metric", "hamming", "-n", "4", "-d", "3",
        "--q-list", "2,3,4",
        "--s-const", "2",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with(CSV_HEADER));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn sweep_requires_exactly_one_size_rule() {
    let out = run(&[
        "sweep", "--metric", "hamming", "-n", "4", "-d", "3", "--q-list", "2,3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "sweep", "--metric", "hamming", "-n", "4", "-d", "3", "--q-list", "2,3",
        "--s-const", "2", "--s-gamma-exp", "1/2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exact_dump_writes_qualifying_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("codes.txt");
    let out = run(&[
        "exact", "--metric", "hamming", "-q", "2", "-n", "3", "-d", "2", "-S", "3",
        "--dump", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let blocks: Vec<&str> = text.trim().split("\n\n").collect();
    assert_eq!(blocks.len(), 8, "8 qualifying codes: {text}");
    for block in blocks {
        assert_eq!(block.lines().count(), 3, "each code has 3 vectors");
        for line in block.lines() {
            assert_eq!(line.len(), 3, "F_2^3 digit strings");
        }
    }
}

#[test]
fn verify_suites_pass_and_exit_zero() {
    let out = run(&["verify", "ball-sizes"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("checks passed"));

    let out = run(&["verify", "w-formula"]);
    assert!(out.status.success());

    let out = run(&["verify", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_controls_work_limit() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("config.txt");
    std::fs::write(&path, "work_limit = 10\n").unwrap();
    let out = bin()
        .args([
            "exact", "--metric", "hamming", "-q", "2", "-n", "4", "-d", "2", "-S", "4",
            "--config", path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    // Environment variable names the default config path.
    let out = bin()
        .env("CODE_DENSITY_CONFIG", path.to_str().unwrap())
        .args([
            "exact", "--metric", "hamming", "-q", "2", "-n", "4", "-d", "2", "-S", "4",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    // A flag overrides the file.
    let out = bin()
        .env("CODE_DENSITY_CONFIG", path.to_str().unwrap())
        .args([
            "exact", "--metric", "hamming", "-q", "2", "-n", "4", "-d", "2", "-S", "4",
            "--work-limit", "1000000",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
}
