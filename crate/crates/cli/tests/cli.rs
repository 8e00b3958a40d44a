use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macdaha")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn macdonald_examples() {
    assert_eq!(stdout(&["macdonald", "--weight", "1,0", "--k", "2"]), "x1");
    assert_eq!(stdout(&["macdonald", "--weight", "0,0"]), "1");
    let two = stdout(&["macdonald", "--weight", "0,1", "--k", "2"]);
    assert!(two.contains("x2") && two.contains("x1"), "{}", two);
    assert_eq!(stdout(&["macdonald", "--weight", "1", "--k", "2"]), "x1");
    assert!(!run(&["macdonald", "--weight", "1,0,0", "--k", "2"]).status.success());
}

#[test]
fn macdonald_json_is_stable() {
    let a = stdout(&["macdonald", "--weight", "0,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["rank"], 2);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    assert_eq!(a, stdout(&["macdonald", "--weight", "0,1", "--format", "json"]));
}

#[test]
fn straighten_examples() {
    assert_eq!(stdout(&["straighten", "Y1 X1", "--k", "2"]), "q·X1Y1 + q·h·X1Y1·T1");
    assert_eq!(stdout(&["straighten", "T1 T1", "--k", "2"]), "1 + h·T1");
    assert_eq!(stdout(&["straighten", "--word", "Y1 X2", "--k", "2"]), "X2Y1 - q·h·X1Y1·T1");
    let v: serde_json::Value = serde_json::from_str(&stdout(&["straighten", "Y1 X1", "--k", "2", "--format", "json"])).unwrap();
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[1]["w"], serde_json::json!([2, 1]));
    assert_eq!(terms[1]["coeff"], "q·h");
    assert!(!run(&["straighten", "T2", "--k", "2"]).status.success());
}

#[test]
fn limits_and_tilde() {
    assert_eq!(stdout(&["limit-macdonald", "--weight", "1"]), "x1");
    let csv = stdout(&["tilde-e", "--index", "|1", "--format", "csv"]);
    assert_eq!(csv, "lambda,mu,coeff\n,1,\"1\"");
    assert!(!run(&["tilde-e", "--index", "1,0"]).status.success());
}

#[test]
fn act_and_bruhat() {
    assert_eq!(stdout(&["act", "--word", "Y1", "--weight", "1"]), "q*t*x1");
    assert_eq!(stdout(&["act", "--word", "T1 T1^-1", "--weight", "2,0"]), "x1^2");
    assert_eq!(stdout(&["act", "--word", "X2", "--weight", "1", "--k", "2"]), "x1*x2");
    assert_eq!(stdout(&["bruhat", "1,0", "0,1"]), "true");
    assert_eq!(stdout(&["bruhat", "0,1", "1,0"]), "false");
}

#[test]
fn verify_suites() {
    let out = run(&["verify", "--suite", "bruhat", "--max-rank", "3"]);
    assert!(out.status.success());
    let out = run(&["verify", "--suite", "eigen", "--max-rank", "3", "--max-degree", "4", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 2);
    let out = run(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_under_seed() {
    let args = ["verify", "--suite", "relations", "--max-rank", "3", "--max-degree", "2", "--seed", "7", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}
