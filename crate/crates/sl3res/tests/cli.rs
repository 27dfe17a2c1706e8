use std::process::{Command, Output};

use serde_json::Value;

fn sl3res(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl3res")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--json", "-"]);
    let o = sl3res(&all);
    (serde_json::from_slice(&o.stdout).expect("valid JSON on stdout"), o.status.code().unwrap())
}

#[test]
fn normal_forms() {
    let o = sl3res(&["nf", "--p", "2", "b0*a0*b0*a0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "a0*b0*a0*b0");

    assert_eq!(stdout(&sl3res(&["nf", "--p", "2", "a0*a0"])), "0");
    // e_β e_α = e_α e_β − e_{α+β}; over F_2 the sign disappears.
    assert_eq!(stdout(&sl3res(&["nf", "--p", "2", "eb(1)*ea(1)"])), "eab(1) + ea(1)*eb(1)");
    // Coefficients print in signed form: 2 ≡ −1 mod 3.
    assert_eq!(stdout(&sl3res(&["nf", "--p", "3", "ea(1)*ea(1)"])), "-ea(2)");
}

#[test]
fn bad_input_exits_with_two() {
    let o = sl3res(&["nf", "--p", "2", "a0*ea(1)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(sl3res(&["nf", "--p", "4", "a0"]).status.code(), Some(2));
    assert_eq!(sl3res(&["gb", "--p", "2", "--rules", "/nonexistent/basis.json"]).status.code(), Some(2));
}

#[test]
fn verify_reports_failing_lemmas_with_exit_one() {
    let (ok, code) = json(&["verify", "--p", "2", "--m", "1"]);
    assert_eq!((ok["passed"].as_bool(), code), (Some(true), 0));
    let (bad, code) = json(&["verify", "--p", "3", "--m", "1"]);
    assert_eq!((bad["passed"].as_bool(), code), (Some(false), 1));
    for key in ["relations", "sign_variants", "generation", "dimension", "coefficient_lemmas"] {
        assert!(bad.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn basis_round_trips_through_json() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("g.json");
    let second = dir.path().join("again.json");
    let o = sl3res(&["gb", "--p", "3", "--m", "2", "--json", first.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = sl3res(&["gb", "--p", "3", "--m", "2", "--rules", first.to_str().unwrap(), "--json", second.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let read = |p: &std::path::Path| -> Value { serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap() };
    let (a, b) = (read(&first), read(&second));
    assert_eq!(a, b);
    assert_eq!(a["rules"].as_array().unwrap().len(), 14);

    // A basis for another characteristic is refused.
    let o = sl3res(&["gb", "--p", "5", "--rules", first.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn straightening_basis_with_a_bound() {
    let (v, code) = json(&["gb", "--p", "2", "--big", "--bound", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], Value::Bool(true));
}

#[test]
fn anick_report() {
    let (v, code) = json(&["anick", "--p", "2", "--m", "2"]);
    assert_eq!(code, 0);
    for key in ["t1", "t2", "degree_tables", "matches_W", "d1", "d2", "complex_check", "exactness"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["t1"].as_array().unwrap().len(), 10);
}

#[test]
fn minimal_report() {
    let (v, code) = json(&["minimal", "--p", "2", "--m", "1"]);
    assert_eq!(code, 0);
    for key in ["computed_on", "pairs", "t1_prime", "t2_prime", "d2_prime", "smallness", "composition", "exactness_at_P1_prime"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let total = |i: &str| v["ext_dims"][i].as_array().unwrap().iter().map(|e| e["count"].as_u64().unwrap()).sum::<u64>();
    assert_eq!(["0", "1", "2", "3"].map(total), [1, 2, 2, 5]);
}
