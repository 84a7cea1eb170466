use std::path::PathBuf;
use std::process::{Command, Output};

use jsonschema::JSONSchema;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_minorperc"));
    c.env_remove("MINORPERC_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).expect("valid JSON")
}

fn schema(name: &str) -> JSONSchema {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "docs", "schemas", name].iter().collect();
    let text = std::fs::read_to_string(&path).unwrap();
    JSONSchema::compile(&serde_json::from_str(&text).unwrap()).unwrap()
}

#[test]
fn classify_examples() {
    let v = json(&["classify", "--r", "3", "--H", "K3,3", "--property", "degenerate"]);
    assert_eq!(v["q"], 5);
    let v = json(&["classify", "--r", "2", "--H", "K3", "--property", "degenerate"]);
    assert_eq!(v["tightness"], "ThetaOne");
    let v = json(&["classify", "--r", "4", "--H", "K5", "--property", "choosable"]);
    assert_eq!(v["q"], 9);
    assert!(schema("classification.json").is_valid(&v));
}

#[test]
fn classify_accepts_inline_json() {
    let v = json(&["classify", "--r", "2", "--H", r#"{"n":3,"edges":[[0,1],[1,2],[0,2]]}"#]);
    assert_eq!(v["tightness"], "ThetaOne");
}

#[test]
fn signature_examples() {
    let s = schema("signature_collection.json");
    let v = json(&["signature", "--G", "K4", "--r", "2", "--builder", "weak", "--verify"]);
    assert_eq!(v["members"].as_array().unwrap().len(), 4);
    assert_eq!(v["verified"], true);
    assert!(s.is_valid(&v));
    let v = json(&["signature", "--G", "P4", "--r", "2", "--builder", "weak"]);
    assert!(v["members"].as_array().unwrap().is_empty());
    assert!(s.is_valid(&v));
    let v = json(&["signature", "--G", "K4", "--r", "2", "--builder", "none", "--verify"]);
    assert_eq!(v["verified"], false);
}

#[test]
fn generated_graphs_match_schema() {
    let v = json(&["generate", "--family", "joincliques:r=3,w=1,t=4", "--format", "json"]);
    let graph = schema("graph.json");
    assert!(graph.is_valid(&v));
    assert!(!graph.is_valid(&serde_json::json!({"n": -1, "edges": []})));
    assert_eq!(v["n"], 2 + 4 * 2);
}

#[test]
fn percolate_at_zero_keeps_degeneracy() {
    let out = run(&["percolate", "--family", "kbip:r=2", "--n", "100", "--p", "0", "--trials", "50"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    let cols: Vec<&str> = row.split(',').collect();
    assert_eq!(cols[6], "1");
    let v = json(&["percolate", "--family", "kbip:r=2", "--n", "50,100,200", "--trials", "100", "--fit", "--format", "json"]);
    assert!(schema("percolation.json").is_valid(&v));
    assert!(v["fit"]["slope"].as_f64().unwrap() < 0.0);
}

#[test]
fn percolate_is_deterministic_across_workers() {
    let args = ["percolate", "--family", "joincliques:r=3,w=1", "--n", "60,120", "--p", "0.2,0.4", "--trials", "300"];
    let a = bin().args(args).env("RAYON_NUM_THREADS", "1").output().unwrap();
    let b = bin().args(args).env("RAYON_NUM_THREADS", "4").output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seed_comes_from_environment() {
    let args = ["percolate", "--family", "graph:K4", "--n", "4", "--p", "0.5", "--trials", "200"];
    let default = stdout(&run(&args));
    assert!(default.contains(",24301\n"));
    let env = bin().args(args).env("MINORPERC_SEED", "99").output().unwrap();
    let env = stdout(&env);
    assert!(env.contains(",99\n"));
    let flag = stdout(&run(&[&args[..], &["--seed", "99"]].concat()));
    assert_eq!(env, flag);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["classify", "--r", "x", "--H", "K3"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--r", "2", "--H", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["percolate", "--family", "K4", "--n", "4"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    // runtime failure: choosability beyond the exhaustive cap
    assert_eq!(run(&["choosable", "--G", "petersen", "--r", "2"]).status.code(), Some(1));
}

#[test]
fn oracle_table_csv() {
    let out = run(&["oracle-table", "--H", "K3", "--n-max", "5", "--check"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("H-name,n,f,d\n"));
    assert!(text.contains("K3,5,4,1"));
}

#[test]
fn minor_and_tau() {
    let v = json(&["minor", "--G", "petersen", "--H", "K5"]);
    assert_eq!(v["contains"], "yes");
    let v = json(&["minor", "--G", "K3,3", "--H", "K5"]);
    assert_eq!(v["contains"], "no");
    let v = json(&["tau", "--H", "petersen"]);
    assert_eq!(v["tau"], 6);
}
