use std::process::{Command, Output};

use apery_zeta_cli::{BenchOutput, ComputeOutput, EXIT_BITS, EXIT_OK, EXIT_USAGE, MAX_BITS_VAR};
use apery_zeta::{Status, VerificationReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apery-zeta"))
        .args(args)
        .env_remove(MAX_BITS_VAR)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> u8 {
    out.status.code().expect("exit code") as u8
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

#[test]
fn compute_zeta5_thirty_digits() {
    let out = run(&["compute", "--system", "zeta5", "--digits", "30"]);
    assert_eq!(code(&out), EXIT_OK);
    assert!(stdout(&out).contains("1.036927755143369926331365486457"));
}

#[test]
fn compute_zeta23_json() {
    let out = run(&["--format", "json", "compute", "--system", "zeta23", "--digits", "20"]);
    assert_eq!(code(&out), EXIT_OK);
    let parsed: ComputeOutput = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed.values.len(), 2);
    assert!(parsed.values[0].decimal.starts_with("1.2020569031595942853"));
    assert!(parsed.values[1].decimal.starts_with("1.6449340668482264364"));
}

#[test]
fn zero_digits_is_a_usage_error() {
    let out = run(&["compute", "--digits", "0"]);
    assert_eq!(code(&out), EXIT_USAGE);
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_selector_is_a_usage_error() {
    assert_eq!(code(&run(&["verify", "bogus"])), EXIT_USAGE);
    assert_eq!(code(&run(&["verify", "--all", "roots"])), EXIT_USAGE);
}

#[test]
fn table_rows_pass() {
    let out = run(&["table", "--n-max", "4"]);
    assert_eq!(code(&out), EXIT_OK);
    let text = stdout(&out);
    let row = text.lines().find(|l| l.starts_with("1\t")).unwrap();
    assert!(row.contains("29/28"));
    assert!(text.lines().skip(1).all(|l| l.ends_with("PASS")));
}

#[test]
fn verify_roots_and_oracle() {
    let out = run(&["--format", "json", "verify", "roots", "oracle", "--n-max", "10"]);
    assert_eq!(code(&out), EXIT_OK);
    let reports: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(reports.len() >= 5);
    for value in reports {
        let report = VerificationReport::from_json(&value.to_string()).unwrap();
        assert_eq!(report.status, Status::Pass, "{}", report.check);
    }
}

#[test]
fn json_is_deterministic_apart_from_timings() {
    let strip = |text: String| -> Vec<serde_json::Value> {
        let mut reports: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
        for r in &mut reports {
            r.as_object_mut().unwrap().remove("seconds");
        }
        reports
    };
    let args = ["--format", "json", "verify", "signs", "integrality", "--n-max", "12"];
    let first = strip(stdout(&run(&args)));
    let second = strip(stdout(&run(&args)));
    assert_eq!(first, second);
}

#[test]
fn bit_cap_exits_with_its_own_code() {
    let out = Command::new(env!("CARGO_BIN_EXE_apery-zeta"))
        .args(["verify", "integrality"])
        .env(MAX_BITS_VAR, "10")
        .output()
        .unwrap();
    assert_eq!(code(&out), EXIT_BITS);

    let out = Command::new(env!("CARGO_BIN_EXE_apery-zeta"))
        .args(["verify", "roots"])
        .env(MAX_BITS_VAR, "lots")
        .output()
        .unwrap();
    assert_eq!(code(&out), EXIT_USAGE);
}

#[test]
fn bench_json_round_trips() {
    let out = run(&["--format", "json", "bench", "--factors", "8", "--n", "2"]);
    assert_eq!(code(&out), EXIT_OK);
    let parsed: BenchOutput = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed.gosper.steps, 8);
    assert_eq!(parsed.recursion.steps, 2);
    assert_eq!(parsed.gosper.digits_zeta5, 7);
    let again = serde_json::to_string(&parsed).unwrap();
    assert_eq!(again.trim(), stdout(&out).trim());
}
