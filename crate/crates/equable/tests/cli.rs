//! End-to-end tests of the installed binary: exit codes, envelope shape,
//! determinism, and file output.

use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equable"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is valid JSON")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn check_success_and_failures() {
    let ok = run(&["check", "3", "6"]);
    assert_eq!(exit_code(&ok), 0);
    let v = stdout_json(&ok);
    assert_eq!(v["command"], "check");
    assert_eq!(v["results"]["gcd_class"], "3");
    assert_eq!(v["results"]["pythagorean"], true);
    assert!(v["version"].as_str().is_some());

    let not_equable = run(&["check", "3", "5"]);
    assert_eq!(exit_code(&not_equable), 1);
    assert_eq!(stdout_json(&not_equable)["results"]["reason"], "NotEquable");

    let not_square = run(&["check", "7", "7"]);
    assert_eq!(exit_code(&not_square), 1);
    assert_eq!(
        stdout_json(&not_square)["results"]["reason"],
        "NotSquareDiscriminant"
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(exit_code(&run(&["check", "3"])), 2);
    assert_eq!(exit_code(&run(&["check", "0", "5"])), 2);
    assert_eq!(exit_code(&run(&["check", "-3", "6"])), 2);
    assert_eq!(exit_code(&run(&["tree", "--gcd", "6", "--max-sum", "100"])), 2);
    assert_eq!(exit_code(&run(&["tree", "--gcd", "3", "--max-sum", "8"])), 2);
    assert_eq!(exit_code(&run(&["pell", "F9", "5"])), 2);
    assert_eq!(exit_code(&run(&["nonsense"])), 2);
}

#[test]
fn tree_json_and_dot() {
    let json = run(&["tree", "--gcd", "4", "--max-sum", "300"]);
    assert_eq!(exit_code(&json), 0);
    let v = stdout_json(&json);
    assert_eq!(v["results"]["node_count"], "4");
    let nodes = v["results"]["nodes"].as_array().unwrap();
    assert!(nodes.iter().any(|n| n["b"] == "116" && n["edge"] == "psi2"));

    let dot = run(&["tree", "--gcd", "5", "--max-sum", "100", "--format", "dot"]);
    assert_eq!(exit_code(&dot), 0);
    let text = String::from_utf8(dot.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("label=\"(5, 10)\""));
    assert!(text.contains("label=\"psi2\""));
}

#[test]
fn branch_pell_triangles_payloads() {
    let branch = run(&["branch", "3", "6", "5"]);
    assert_eq!(exit_code(&branch), 0);
    let v = stdout_json(&branch);
    assert_eq!(v["results"]["terms"][4], "3975");

    let bad = run(&["branch", "3", "7", "5"]);
    assert_eq!(exit_code(&bad), 1);

    let pell = run(&["pell", "F2", "5"]);
    assert_eq!(exit_code(&pell), 0);
    let v = stdout_json(&pell);
    assert_eq!(v["results"]["b_values"][4], "50180");

    let lowercase = run(&["pell", "f2", "5"]);
    assert_eq!(stdout_json(&lowercase)["results"]["b_values"][4], "50180");

    let triangles = run(&["triangles"]);
    assert_eq!(exit_code(&triangles), 0);
    assert_eq!(stdout_json(&triangles)["results"]["count"], "5");
}

#[test]
fn realize_lists_classes() {
    let single = run(&["realize", "5", "10"]);
    assert_eq!(exit_code(&single), 0);
    let v = stdout_json(&single);
    assert_eq!(v["results"]["vertices"].as_array().unwrap().len(), 4);

    let all = run(&["realize", "5", "10", "--all-classes"]);
    let v = stdout_json(&all);
    let count: usize = v["results"]["class_count"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    assert!(count >= 2);
}

#[test]
fn render_writes_deterministic_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("figure.svg");
    let path_str = path.to_str().unwrap();

    let first = run(&["render", "5", "5", "--out", path_str]);
    assert_eq!(exit_code(&first), 0);
    let bytes_first = std::fs::read(&path).unwrap();
    assert!(bytes_first.starts_with(b"<svg"));
    assert!(String::from_utf8_lossy(&bytes_first).contains("area = 20"));

    std::fs::remove_file(&path).unwrap();
    run(&["render", "5", "5", "--out", path_str]);
    let bytes_second = std::fs::read(&path).unwrap();
    assert_eq!(bytes_first, bytes_second);

    let missing = dir.path().join("nope.svg");
    let fail = run(&["render", "3", "5", "--out", missing.to_str().unwrap()]);
    assert_eq!(exit_code(&fail), 1);
    assert!(!missing.exists());
}

#[test]
fn json_output_round_trips_byte_identically() {
    for args in [
        vec!["check", "5", "85"],
        vec!["tree", "--gcd", "3", "--max-sum", "700"],
        vec!["pell", "F3", "7"],
        vec!["realize", "5", "10", "--all-classes"],
    ] {
        let first = run(&args);
        assert_eq!(exit_code(&first), 0, "{args:?}");
        // Parsing must succeed, and re-running the command must reproduce
        // the bytes exactly.
        let _: Value = stdout_json(&first);
        let second = run(&args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn json_flag_is_accepted() {
    let output = run(&["check", "3", "6", "--json"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout_json(&output)["results"]["lep"], true);
}
