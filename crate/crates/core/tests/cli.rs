use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bethe-cells")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn evolve_sl3_at_ones() {
    let out = run(&["evolve", "--rank", "2", "--word", "121", "--params", "1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "pp/1");
    assert_eq!(v["tuple"][0], "1 + 2*x + 1/2*x^2");
    assert_eq!(v["tuple"][1], "1 + x + 1/2*x^2");
    assert_eq!(v["degrees"], serde_json::json!([2, 2]));
}

#[test]
fn evolve_sl4_at_ones() {
    let v = json(&run(&["evolve", "--rank", "3", "--word", "121321", "--params", "1,1,1,1,1,1"]));
    // a_i = 1 in the closed form: y₁ = 1 + 3x + (3/2)x² + x³/6
    assert_eq!(v["tuple"][0], "1 + 3*x + 3/2*x^2 + 1/6*x^3");
    assert_eq!(v["degrees"], serde_json::json!([3, 4, 3]));
}

#[test]
fn compare_passes() {
    let out = run(&["compare", "--rank", "3", "--trials", "20", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["words"].as_u64(), v["checks"].as_u64()), (Some(16), Some(320)));
    assert_eq!(run(&["compare", "--rank", "2", "--word", "1121"]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["compare", "--rank", "2", "--word", "9"]).status.code(), Some(2));
    assert_eq!(run(&["evolve", "--rank", "2", "--word", "12", "--params", "1"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["evolve", "--word", "1", "--params", "1"]).status.code(), Some(2));
}

#[test]
fn tetra_reports() {
    let out = run(&["tetra", "--trials", "100", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["failures"], 0);
    let v = json(&run(&["tetra", "--trials", "1", "--params", "1,1,1,1,1,1"]));
    assert_eq!(v["left"], v["right"]);
}

#[test]
fn bethe_statuses() {
    let out = run(&["bethe", "--rank", "2", "--word", "121", "--params", "1,3,5", "--tol", "1e-9"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["report"]["status"], "OK");
    // b₂ = 2b₁ makes y₂ a square
    let out = run(&["bethe", "--rank", "2", "--word", "121", "--params", "1,2,3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["report"]["status"], "DEGENERATE");
}

#[test]
fn positivity_and_charts() {
    let v = json(&run(&["positivity", "--rank", "3", "--params", "1,1,1,1,1,1"]));
    assert_eq!(v["positive"], true);
    assert_eq!(v["witnesses"], serde_json::json!(["3", "1"]));
    let v = json(&run(&["charts", "--rank", "2", "--from", "121", "--to", "212", "--params", "1,1,1"]));
    assert_eq!(v["image"], serde_json::json!(["1/2", "2", "1/2"]));
    assert_eq!(v["same_matrix"], true);
}

#[test]
fn output_is_deterministic() {
    let args = ["compare", "--rank", "2", "--trials", "5", "--seed", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["bethe", "--rank", "3", "--seed", "11"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn config_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bethe-cells"))
        .args(["--config", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"command":"evolve","rank":2,"word":"","params":[]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["tuple"], serde_json::json!(["1", "1"]));
}
