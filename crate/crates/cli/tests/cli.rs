use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphsym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_graphsym"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("one JSON document")
}

#[test]
fn distnum_from_stdin() {
    // P4 in graph6
    let out = run_stdin(&["distnum", "-", "--json"], "Ch\n");
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["value"], 2);
    assert_eq!(v["mode"], "exact");
    assert_eq!(v["witness"]["labels"].as_array().unwrap().len(), 4);
}

#[test]
fn distidx_undefined_is_not_an_error() {
    let out = run(&["distidx", "K2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["mode"], "undefined");
    assert!(v["value"].is_null());
}

#[test]
fn product_emits_graph6() {
    let out = run(&["product", "--op", "strong", "K2", "K2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "C~");
    let out = run(&["product", "--op", "cartesian", "P3", "P3", "--json"]);
    let v = json(&out);
    assert_eq!(
        (v["vertices"].as_u64(), v["edges"].as_u64()),
        (Some(9), Some(12))
    );
}

#[test]
fn product_reads_files() {
    let dir = std::env::temp_dir().join(format!("graphsym-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.g6");
    let b = dir.join("b.txt");
    std::fs::write(&a, "A_\n").unwrap();
    std::fs::write(&b, "3\n0 1\n1 2\n").unwrap();
    let out = run(&[
        "product",
        "--op",
        "direct",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        "--format",
        "edgelist",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("6\n"));
    assert_eq!(text.lines().count(), 1 + 4);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn autgroup_elements() {
    let out = run(&["autgroup", "C5", "--elements"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "order 10");
    assert_eq!(lines[1], "0 1 2 3 4");
    assert_eq!(lines.len(), 11);
}

#[test]
fn sthin_and_traceable() {
    let v = json(&run(&["sthin", "K3", "--json"]));
    assert_eq!(v["s_thin"], false);
    assert_eq!(v["classes"], serde_json::json!([[0, 1, 2]]));
    let v = json(&run(&["traceable", "P3xP3s", "--json"]));
    assert_eq!(v["traceable"], true);
    assert_eq!(v["path"].as_array().unwrap().len(), 9);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["distnum", "Q3x"]).status.code(), Some(2));
    assert_eq!(
        run_stdin(&["distnum", "-"], "3\n0 0\n").status.code(),
        Some(2)
    );
}

#[test]
fn budget_errors_name_the_bound() {
    let out = run(&["autgroup", "P5xP5s", "--aut-bound", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("25 > 10"), "{err}");
}

#[test]
fn env_overrides_budget() {
    let out = Command::new(env!("CARGO_BIN_EXE_graphsym"))
        .args(["distnum", "P4", "--json"])
        .env("GRAPHSYM_EXACT_BOUND", "0")
        .output()
        .unwrap();
    assert_eq!(json(&out)["mode"], "certified-upper");
}

#[test]
fn same_seed_same_bytes() {
    let args = ["distidx", "P3xP4s", "--json", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["value"], 2);
}

#[test]
fn verify_corpus_file() {
    let dir = std::env::temp_dir().join(format!("graphsym-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let corpus = dir.join("corpus.txt");
    std::fs::write(&corpus, "# small\nP3\nP2xP4s\nK2\n").unwrap();
    let out = run(&[
        "verify",
        "--all",
        "--corpus",
        corpus.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["check"] == "traceable-index" && r["verdict"] == "pass"));
    let text = run(&["verify", "--all", "--corpus", corpus.to_str().unwrap()]);
    assert!(String::from_utf8(text.stdout)
        .unwrap()
        .lines()
        .last()
        .unwrap()
        .contains("0 fail"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_default_corpus_passes() {
    let out = run(&["verify", "--all"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
}
