use std::process::{Command, Output};

use serde_json::Value;

fn qdouble(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdouble")).args(args).output().expect("run qdouble")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn normalize_example() {
    let o = qdouble(&["normalize", "b*a", "--group", "sl2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(v^2)*a*b");
}

#[test]
fn pair_example() {
    let o = qdouble(&["pair", "--form", "beta", "1", "a"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn pairing_of_k_with_a() {
    let o = qdouble(&["pair", "--form", "pairing", "K", "a"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).trim().is_empty());
}

#[test]
fn xi_of_generator() {
    let o = qdouble(&["double", "xi", "a"]);
    assert_eq!(stdout(&o).trim(), "a*Ki_2");
}

#[test]
fn hopf_suite_exits_zero() {
    let o = qdouble(&["verify", "--suite", "hopf", "--degree", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(String::from_utf8_lossy(&o.stderr).contains("running hopf"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qdouble(&["--group", "sl5", "relations"]).status.code(), Some(2));
    assert_eq!(qdouble(&["normalize", "a*?"]).status.code(), Some(2));
    assert_eq!(qdouble(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qdouble(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(qdouble(&["--group", "sl3", "repr", "simple", "--nu", "2", "--nuprime", "1"]).status.code(), Some(2));
}

#[test]
fn failing_checks_exit_one() {
    // The pullback of [beta] along Δ is not a 2-cocycle.
    let o = qdouble(&["double", "verify", "--suite", "cocycle", "--degree", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL cocycle[sl2]/pullback along Delta"));
}

#[test]
fn relations_match_golden_file() {
    let o = qdouble(&["relations", "--format", "json"]);
    assert_eq!(stdout(&o), include_str!("fixtures/relations_sl2.json"));
}

#[test]
fn iwasawa_report_matches_golden_file() {
    let o = qdouble(&["double", "verify", "--suite", "iwasawa", "--degree", "2", "--format", "json"]);
    assert_eq!(stdout(&o), include_str!("fixtures/iwasawa_sl2_degree2.json"));
}

#[test]
fn report_schema() {
    let o = qdouble(&["verify", "--suite", "beta,flags", "--format", "json", "--timings"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["config"]["group"], "sl2");
    assert_eq!(v["config"]["degree"], 3);
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 2);
    for s in suites {
        assert!(s["elapsed_ms"].is_u64());
        let names: Vec<&str> = s["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }
}

#[test]
fn sl3_presentation_and_double_relations() {
    let o = qdouble(&["relations", "--group", "sl3", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["algebras"][0]["generators"].as_array().unwrap().len(), 9);
    let o = qdouble(&["double", "relations", "--group", "sl3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["relations"].as_array().unwrap().len(), 81);
}

#[test]
fn repr_subcommands() {
    let o = qdouble(&["repr", "simple", "--nu", "1", "--nuprime", "1", "--diagonal-only"]);
    assert!(stdout(&o).contains("is reducible (invariant subspace of dim 3)"));
    let o = qdouble(&["repr", "peter-weyl", "--nu", "1", "--nuprime", "1", "--fast-rank"]);
    assert!(stdout(&o).contains("16 of 16"));
    let o = qdouble(&["repr", "flags", "--group", "sl3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
