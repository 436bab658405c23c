use std::process::{Command, Output};

use serde_json::Value;
use staircase_core::exactnum::{parse_scalar, Poly, RatFun};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_staircase"))
        .args(args)
        .env_remove("STAIRCASE_MAX_STATES")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

#[test]
fn count_example() {
    assert_eq!(stdout(&["count", "--k", "3", "--L", "2", "--n", "3"]), "15");
    assert_eq!(stdout(&["count", "--k", "3", "--L", "2", "--n", "5", "--mod", "10"]), "3");
}

#[test]
fn gf_closed_text() {
    assert_eq!(stdout(&["gf", "--k", "2", "--L", "2", "--method", "closed"]), "1 / 1 - 2*x");
}

#[test]
fn gf_methods_agree() {
    for (k, l) in [("3", "2"), ("4", "3")] {
        let closed = stdout(&["gf", "--k", k, "--L", l, "--method", "closed"]);
        for method in ["reconstruct", "assembled", "kernel"] {
            assert_eq!(stdout(&["gf", "--k", k, "--L", l, "--method", method]), closed, "{method}");
        }
    }
    assert_eq!(
        stdout(&["gf", "--k", "4", "--L", "1", "--method", "knopfmacher"]),
        stdout(&["gf", "--k", "4", "--L", "1", "--method", "closed"])
    );
}

fn series(k: u32, l: u32, terms: u32, method: &str) -> Vec<String> {
    let text = stdout(&[
        "series",
        "--k",
        &k.to_string(),
        "--L",
        &l.to_string(),
        "--terms",
        &terms.to_string(),
        "--method",
        method,
    ]);
    serde_json::from_str(&text).unwrap()
}

#[test]
fn series_methods_agree() {
    for k in 2..=5 {
        for l in 1..=3 {
            let transfer = series(k, l, 11, "transfer");
            assert_eq!(series(k, l, 11, "brute"), transfer, "k={k} L={l}");
            assert_eq!(series(k, l, 11, "closed"), transfer, "k={k} L={l}");
        }
    }
}

fn ratfun_from_json(v: &Value) -> RatFun {
    let poly = |key: &str| {
        let coeffs = v[key]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| parse_scalar(c.as_str().unwrap()).unwrap())
            .collect();
        Poly::from_coeffs(coeffs)
    };
    RatFun::new(poly("num"), poly("den")).unwrap()
}

#[test]
fn gf_json_round_trip() {
    let text = stdout(&["--json", "gf", "--k", "5", "--L", "2", "--method", "closed"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap(), text);
    let f = ratfun_from_json(&v);
    assert_eq!(v["text"], f.to_string());
    let back: Vec<String> = f.num().coeffs().iter().map(ToString::to_string).collect();
    assert_eq!(v["num"], serde_json::json!(back));
}

#[test]
fn count_json_uses_strings() {
    let v: Value = serde_json::from_str(&stdout(&["count", "--k", "3", "--L", "2", "--n", "40", "--json"])).unwrap();
    assert!(v["count"].is_string());
    assert_eq!(v["modulus"], Value::Null);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["count", "--k", "3", "--L", "2"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--k", "1", "--L", "2", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--k", "3", "--L", "2", "--n", "3", "--mod", "0"]).status.code(), Some(2));
    assert_eq!(run(&["kernel-dump", "--L", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "identities"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--suite", "table1"]).status.code(), Some(0));
}

#[test]
fn verify_failure_exits_one() {
    // the stated closed forms for c_1 and the component sums disagree with the solve
    let out = run(&["verify", "--suite", "kernel", "--L", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS] det L=2"));
    assert!(text.contains("[PASS] root L=2"));
}

#[test]
fn verify_output_is_ordered() {
    let a = stdout(&["verify", "--suite", "identities"]);
    let b = stdout(&["verify", "--suite", "identities"]);
    assert_eq!(a, b);
    assert!(a.lines().next().unwrap().starts_with("[PASS] i3(m=0, n=0)"));
    assert!(a.ends_with("suite identities: 329 passed, 0 failed"));
}

#[test]
fn verify_all_summary() {
    let out = run(&["verify", "--suite", "all", "--json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["passed"].as_u64().unwrap() >= 200);
}

#[test]
fn max_states_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_staircase"))
        .args(["count", "--k", "3", "--L", "2", "--n", "3"])
        .env("STAIRCASE_MAX_STATES", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("too large"));
}

#[test]
fn states_and_dot() {
    let path = std::env::temp_dir().join(format!("staircase-{}.dot", std::process::id()));
    let text = stdout(&["states", "--k", "3", "--L", "2", "--dot", path.to_str().unwrap()]);
    assert_eq!(text.lines().collect::<Vec<_>>(), ["1,1", "1,2", "2,1", "2,2", "2,3", "3,2", "3,3"]);
    let dot = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(dot.starts_with("digraph"));
}

#[test]
fn kernel_dump_shape() {
    let v: Value = serde_json::from_str(&stdout(&["kernel-dump", "--L", "3"])).unwrap();
    assert_eq!(v["A"].as_array().unwrap().len(), 7);
    assert_eq!(v["b_prime"].as_array().unwrap().len(), 7);
    assert_eq!(v["A"][0][0], "1 - x / 1");
}
