//! End-to-end checks of the binary: output shapes, determinism, exit codes
//! and the family file round trip.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subposet-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn count_example() {
    assert_eq!(
        stdout(&["count", "--n", "2", "--family", "all", "--poset", "P2"]),
        "{\"value\":\"5\"}\n"
    );
}

#[test]
fn formula_example() {
    assert_eq!(
        stdout(&["formula", "sperner-erdos", "--n", "3", "--k", "1"]),
        "{\"value\":\"3\"}\n"
    );
}

#[test]
fn la_exact_example() {
    let out = stdout(&["la", "exact", "--n", "3", "--forbid", "V2", "--count", "P2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], "3");
    assert_eq!(v["exact"], true);
}

#[test]
fn output_is_deterministic() {
    let args = ["la", "exact", "--n", "3", "--forbid", "B", "--count", "D2"];
    let a = stdout(&args);
    let b = stdout(&args);
    assert_eq!(a, b);
    let args = ["gamma", "--n", "4", "--family", "level=2", "--r", "2"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn usage_and_budget_exit_codes() {
    let out = run(&["count", "--n", "2", "--family", "all", "--poset", "Zed"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&[
        "beta", "--n", "4", "--family", "all", "--r", "3", "--budget", "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["nonsense-subcommand"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_constants_passes() {
    let out = run(&["verify", "constants"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("PASS"), "got: {text}");
}

#[test]
fn family_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("subposet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("family.txt");
    let p = path.to_str().unwrap();
    stdout(&["family", "gen", "--n", "3", "--levels", "1,2", "--out", p]);
    let summary = stdout(&["family", "read", "--file", p]);
    let v: serde_json::Value = serde_json::from_str(&summary).unwrap();
    assert_eq!(v["size"], 6);
    assert_eq!(v["alpha"][1], "3");
    let counted = stdout(&[
        "count",
        "--n",
        "3",
        "--family",
        &format!("file={p}"),
        "--poset",
        "P2",
    ]);
    assert_eq!(counted, "{\"value\":\"6\"}\n");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn tsv_format() {
    let out = stdout(&[
        "formula",
        "chain-chain",
        "--n",
        "3",
        "--k",
        "2",
        "--format",
        "tsv",
    ]);
    assert!(out.contains("value\t6"));
    assert!(out.contains("arg\t1,2"));
}
