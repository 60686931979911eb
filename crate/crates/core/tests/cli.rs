use std::process::{Command, Output};

use legendre_hgf::cli::survey::{read_csv, CSV_COLUMNS};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_legendre-hgf"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn count_exit_codes() {
    let o = run(&["count", "--p", "5", "--lambda", "2", "--method", "both"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("difference:        0"));

    let o = run(&["count", "--p", "7", "--method", "formula"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("1 mod 4"));

    let o = run(&["count", "--p", "5", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("singular curve"));

    let o = run(&["count", "--lambda", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn count_json() {
    let o = run(&["count", "--p", "13", "--lambda", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["brute_count"], v["formula_count"]);
    assert_eq!(v["difference"], 0);
    assert!(v["formula_residual"].is_string());
}

#[test]
fn survey_csv_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("survey.csv");
    let o = run(&["survey", "--pmax", "29", "--format", "csv", "--out", path.to_str().unwrap(), "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next().unwrap(), CSV_COLUMNS);
    let rows = read_csv(text.as_bytes()).unwrap();
    let primes: std::collections::BTreeSet<_> = rows.iter().map(|r| r.p).collect();
    assert_eq!(primes.into_iter().collect::<Vec<_>>(), vec![5, 13, 17, 29]);

    let mut rewritten = Vec::new();
    legendre_hgf::cli::survey::write_csv(&rows, &mut rewritten).unwrap();
    assert_eq!(String::from_utf8(rewritten).unwrap(), text);
}

#[test]
fn survey_is_deterministic_across_job_counts() {
    let a = run(&["survey", "--pmax", "41", "--jobs", "1"]);
    let b = run(&["survey", "--pmax", "41", "--jobs", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn survey_failures() {
    let o = run(&["survey", "--pmax", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["survey", "--pmax", "29", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("first failure: p = 5"));
    assert!(!stdout(&run(&["survey", "--help"])).contains("inject-fault"));
    assert!(stdout(&run(&["survey", "--help"])).contains(CSV_COLUMNS));
}

#[test]
fn max_p_environment_variable() {
    let o = bin()
        .args(["count", "--p", "13", "--lambda", "2"])
        .env("LEGENDRE_HGF_MAX_P", "11")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exceeds"));
    let o = bin()
        .args(["count", "--p", "13", "--lambda", "2"])
        .env("LEGENDRE_HGF_MAX_P", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn congruence_hasse_witt_transform_match() {
    let o = run(&["congruence", "--m", "1", "--d", "2", "--p", "13", "--all-x"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("12/12 hold"));

    let o = run(&["congruence", "--m", "3", "--d", "4", "--p", "17", "--all-x", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["held"], 16);

    let o = run(&["hasse-witt", "--p", "5", "--lambda", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("trace 3") && out.contains("trace ≡ a_p mod p: ok"));

    let o = run(&["hasse-witt", "--p", "13", "--lambda", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["trace_congruence"], true);
    assert_eq!(v["matrix"][1][0], 0);

    let o = run(&["transform", "--p", "13", "--a", "3", "--b", "9", "--c", "6", "--x", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(": ok"));

    let o = run(&["match", "--p", "13", "--lambda", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows[1]["holds"], true);
    assert_eq!(rows.as_array().unwrap().len(), 3);
}

#[test]
fn periods_command() {
    let o = run(&["periods", "--lambda", "1/4", "--terms", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[1]["exact"], "17/16");
    assert_eq!(v[1]["decimal"], "1.06250000000000000000");
    let o = run(&["periods", "--lambda", "one quarter"]);
    assert_eq!(o.status.code(), Some(2));
}
