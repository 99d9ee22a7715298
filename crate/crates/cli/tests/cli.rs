use std::process::{Command, Output};

use lattice_harmonics::verify::SuiteReport;
use lattice_harmonics::{SymFunc, TPolynomial};
use serde_json::Value;

fn latharm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latharm")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = latharm(&all);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn dim_three_ways_agree() {
    let v = json(&["dim", "--mu", "2,1", "--hole", "0,0"]);
    assert_eq!((v["formula"].as_u64(), v["basis"].as_u64(), v["oracle"].as_u64()), (Some(3), Some(3), Some(3)));
    assert_eq!(v["hole"], serde_json::json!([0, 0]));
    assert_eq!(v["agree"], true);
    assert!(stdout(&latharm(&["dim", "--mu", "2,1", "--hole", "0,0"])).contains("3 = 3 = 3"));
}

#[test]
fn dim_of_a_row() {
    let v = json(&["dim", "--mu", "3"]);
    assert_eq!(v["formula"], 1);
    assert_eq!(v["basis"], 1);
}

#[test]
fn dim_above_the_oracle_budget() {
    let v = json(&["dim", "--mu", "4,2,1", "--hole", "0,1"]);
    assert_eq!(v["formula"], 90);
    assert_eq!(v["basis"], 90);
    assert_eq!(v["rank"], 90);
    assert!(v["oracle"].is_null());
    assert!(v["oracle_skipped"].as_str().unwrap().contains("budget"));
    let text = stdout(&latharm(&["dim", "--mu", "4,2,1", "--hole", "0,1"]));
    assert!(text.contains("skipped"), "{text}");
}

#[test]
fn show_basis_uses_the_canonical_text_form() {
    let v = json(&["dim", "--mu", "2,1", "--hole", "0,1", "--show-basis"]);
    assert_eq!(v["polynomials"], serde_json::json!(["x2 - x1", "1"]));
}

#[test]
fn hilbert_series() {
    assert_eq!(json(&["hilbert", "--mu", "1,1,1"])["hilbert"], serde_json::json!([1, 2, 2, 1]));
    assert_eq!(json(&["hilbert", "--mu", "3"])["hilbert"], serde_json::json!([1]));
    assert!(stdout(&latharm(&["hilbert", "--mu", "1,1,1"])).contains("[1,2,2,1]"));
    let v = json(&["hilbert", "--mu", "3,1", "--hole", "0,0"]);
    assert_eq!(v["dim"], 4);
}

#[test]
fn hilbert_through_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.jsonl");
    let p = path.to_str().unwrap();
    assert_eq!(json(&["hilbert", "--mu", "2,2", "--cache", p])["source"], "oracle");
    let again = json(&["hilbert", "--mu", "2,2", "--cache", p]);
    assert_eq!(again["source"], "cache");
    assert_eq!(again["hilbert"], serde_json::json!([1, 3, 2]));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, "{\"diagram\":\"0,0;0,1;1,0;1,1\",\"hilbert\":[1,3,2],\"dim\":6}\n");
}

#[test]
fn frobenius_of_a_column_of_two() {
    let v = json(&["frobenius", "--mu", "1,1"]);
    let f: SymFunc = serde_json::from_value(v.clone()).unwrap();
    let mut want = SymFunc::schur("2".parse().unwrap());
    want.add_term("1,1".parse().unwrap(), &TPolynomial::t_pow(1)).unwrap();
    assert_eq!(f, want);
    assert_eq!(serde_json::to_value(&f).unwrap(), v);
    assert_eq!(stdout(&latharm(&["frobenius", "--mu", "1,1"])).trim(), "t*s[1,1] + s[2]");
}

#[test]
fn verify_suites_pass() {
    for (suite, n) in [("recurrence", "4"), ("lemmas", "4"), ("basis-mu", "6")] {
        let o = latharm(&["verify", suite, "--max-n", n]);
        assert_eq!(code(&o), 0, "{suite}: {}", stdout(&o));
        let text = stdout(&o);
        assert!(text.lines().any(|l| l.starts_with("PASS ")), "{text}");
        assert!(!text.contains("FAIL"), "{text}");
    }
}

#[test]
fn verify_reports_the_punctured_nesting_counterexample() {
    let o = latharm(&["verify", "nesting", "--max-n", "4"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL nesting-punctured mu=2,2 lambda=2,1,1 hole=0,1"));
}

#[test]
fn verify_json_round_trips_and_ignores_jobs() {
    let one = latharm(&["verify", "recurrence", "--max-n", "4", "--format", "json", "--jobs", "1"]);
    let four = latharm(&["verify", "recurrence", "--max-n", "4", "--format", "json", "--jobs", "4"]);
    assert_eq!(stdout(&one), stdout(&four));
    let r: SuiteReport = serde_json::from_str(&stdout(&one)).unwrap();
    assert!(r.passed());
    assert_eq!(r.cases.len(), 33);
    let back: Value = serde_json::to_value(&r).unwrap();
    assert_eq!(back, serde_json::from_str::<Value>(&stdout(&one)).unwrap());
}

#[test]
fn seed_is_printed_and_used() {
    let o = latharm(&["verify", "properties", "--max-n", "3", "--cases", "50", "--seed", "42"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("seed = 42"), "{text}");
    assert!(text.contains("PASS leibniz seed=42 cases=50"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["dim", "--mu", "2,1", "--hole", "2,2"][..],
        &["dim", "--mu", "2,3"],
        &["dim"],
        &["hilbert", "--mu", "4,2,1,1", "--hole", "0,0"],
        &["verify", "everything"],
        &["verify", "recurrence", "--max-n", "0"],
        &["verify", "recurrence", "--jobs", "0"],
        &["dim", "--mu", "2", "--format", "xml"],
    ] {
        let o = latharm(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn oracle_override_warns() {
    let o = latharm(&["dim", "--mu", "4,2,1", "--hole", "0,1", "--oracle-cells", "7", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["oracle"], 90);
}
