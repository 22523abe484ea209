use std::process::{Command, Output};

use hypint::closed::IntegralSpec;
use hypint::exact::{from_csv, table, TableKind};
use hypint::{Float, PrecisionContext};
use serde_json::Value;

fn hypint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypint")).args(args).env_remove("HYPINT_BITS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = hypint(&full);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?} is not JSON: {e}\n{}", stdout(&o)))
}

#[test]
fn eval_examples() {
    let v = json(&["eval", "--L", "2", "--T", "0"]);
    assert!(v["value"].as_str().unwrap().starts_with("8.525567976350115818470428531923"));
    assert_eq!(v["combination"]["zeta3/pi^2"], "7");

    // against the quadrature oracle
    let ctx = PrecisionContext::new(128).unwrap();
    let q = IntegralSpec::new(1, 0, &ctx.real(2), &ctx.real(1)).unwrap().integral(&ctx).unwrap();
    let v = json(&["eval", "--L", "2", "--T", "1"]);
    let got = Float::with_val(ctx.prec(), Float::parse(v["value"].as_str().unwrap()).unwrap());
    assert!(Float::with_val(ctx.prec(), got - &q.value).abs() < 1e-30);

    let v = json(&["eval", "--power", "--N", "2"]);
    assert_eq!(v["coefficients"][0], "14");

    let v = json(&["symbolic", "--L", "3", "--T", "2"]);
    assert!(v["combination"].is_object());
}

#[test]
fn every_command_emits_json() {
    json(&["eval", "--L", "4", "--T", "2.5"]);
    json(&["eval", "--N", "2", "--K", "1", "--L", "0.5", "--T", "1.5"]);
    json(&["eval", "--L", "7", "--T", "0"]);
    json(&["table", "--kind", "u", "--n", "5"]);
    json(&["table", "--kind", "dN", "--n", "3"]);
    let c = json(&["constants"]);
    assert!(c["constants"]["beta2"].as_str().unwrap().starts_with("9.159655941772190150546035149323841"));
    json(&["products"]);
    json(&["products", "--s", "0.25", "--terms", "500"]);
    let r = json(&["verify", "--suite", "polygamma"]);
    assert_eq!(r["suite"], "polygamma");
    assert!(!r["cases"].as_array().unwrap().is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(hypint(&["eval", "--L", "2", "--T", "0"]).status.code(), Some(0));
    assert_eq!(hypint(&["table", "--kind", "q", "--n", "4"]).status.code(), Some(2));
    assert_eq!(hypint(&["eval", "--nonsense"]).status.code(), Some(2));
    assert_eq!(hypint(&["--bits", "40", "constants"]).status.code(), Some(2));
    assert_eq!(hypint(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(hypint(&["verify", "--trials", "0"]).status.code(), Some(2));

    let o = hypint(&["eval", "--L", "5", "--T", "1.5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("L = 5"));
    assert_eq!(hypint(&["symbolic", "--L", "2", "--T", "0.5"]).status.code(), Some(3));
    assert_eq!(hypint(&["eval", "--L", "2", "--T", "-1"]).status.code(), Some(3));
}

#[test]
fn table_csv_round_trips() {
    for (name, kind) in [("g", TableKind::G), ("h", TableKind::H), ("c", TableKind::C), ("d", TableKind::D), ("v", TableKind::V), ("y", TableKind::Y)] {
        let o = hypint(&["table", "--kind", name, "--n", "9"]);
        assert!(o.status.success());
        let text = stdout(&o);
        assert!(text.starts_with("N,k,numerator,denominator\n"));
        assert_eq!(from_csv(kind, &text).unwrap(), table(kind, 9).unwrap(), "{name}");
    }
}

#[test]
fn verify_exit_code_matches_report() {
    let dir = std::env::temp_dir().join(format!("hypint-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = hypint(&["verify", "--suite", "recurrence2", "--trials", "5", "--seed", "7", "--out", path.to_str().unwrap()]);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let fails = report["cases"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").count();
    assert_eq!(o.status.success(), fails == 0);
    assert_eq!(report["seed"], 7);
    assert_eq!(report["cases"].as_array().unwrap().len(), 5);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bits_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_hypint")).args(["--format", "json", "constants"]).env("HYPINT_BITS", "256").output().unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["bits"], 256);
    assert!(v["constants"]["pi"].as_str().unwrap().len() > 70);
}
