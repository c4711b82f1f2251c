use std::process::{Command, Output};

fn recsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recsym")).args(args).env_remove("RECSYM_SEED").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn eval_json_is_pure_json() {
    let out = recsym(&["eval", "le((1;1,0,0),(13;0,0,5))", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["quat"]["s"]["re"], "13");
    assert_eq!(v["quat"]["v"][0]["re"], "12");
}

#[test]
fn check_json_to_stdout_is_pure_json() {
    let out = recsym(&["check", "--id", "det_equals_qform", "--id", "eq22_cross_term", "--count", "20", "--json", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[1]["identity_id"], "eq22_cross_term");
    assert!(String::from_utf8_lossy(&out.stderr).contains("PASS det_equals_qform"));
}

#[test]
fn check_json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = recsym(&["check", "--id", "eq11_boost_unit", "--count", "10", "--backend", "float", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS eq11_boost_unit [float] 10 samples"));
    let reports: Vec<serde_json::Value> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(reports[0]["backend"], "float");
    assert_eq!(reports[0]["samples_run"], 10);
}

#[test]
fn seed_comes_from_env_unless_flag_given() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_recsym"));
        cmd.args(["check", "--id", "det_equals_qform", "--count", "1", "--json", "-"]).env_remove("RECSYM_SEED");
        if let Some(seed) = env {
            cmd.env("RECSYM_SEED", seed);
        }
        if let Some(seed) = flag {
            cmd.args(["--seed", seed]);
        }
        let reports: Vec<serde_json::Value> = serde_json::from_slice(&cmd.output().unwrap().stdout).unwrap();
        reports[0]["seed"].as_u64().unwrap()
    };
    assert_eq!(run(Some("42"), None), 42);
    assert_eq!(run(Some("42"), Some("9")), 9);
    assert_eq!(run(None, None), recsym::checker::DEFAULT_SEED);
}

#[test]
fn searches_report_outcome_through_exit_code() {
    let out = recsym(&["search", "--id", "rs_associativity", "--count", "25"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "no counterexample in 25 samples\n");

    let out = recsym(&["search", "--id", "rs_commutativity"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("rs_commutativity: witness found"));

    // Zero samples cannot produce an expected witness.
    let out = recsym(&["search", "--id", "le_commutativity", "--count", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_and_input_errors_exit_two_with_empty_stdout() {
    for args in [
        &["eval", "le((1;1,0,0))"][..],
        &["eval", "det((1;0,0,0))"],
        &["eval", "le((1;1,0,0),(2;1,1,0))"],
        &["eval", "rs(X, X)"],
        &["check", "--backend", "quad"],
        &["check", "--id", "eq00"],
        &["boost", "1/2", "1/2"],
        &["boost", "0.9", "0.9", "0"],
        &["boost", "0", "0", "0", "--rule", "rs"],
        &[],
    ] {
        let out = recsym(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn boost_with_rs_composition() {
    let out = recsym(&["boost", "3/5", "0", "0", "--compose", "0", "3/5", "0", "--rule", "rs", "--backend", "exact"]);
    assert_eq!(out.status.code(), Some(0));
    // (5/4; 3/4, 0, 0) (x) (5/4; 0, 3/4, 0) picks up i (3/4)^2 along z.
    assert_eq!(stdout(&out), "(25/16; 15/16, 15/16, 9/16i)\nqform = 1\n");
}
