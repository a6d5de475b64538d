//! End-to-end runs of the `lecycle` binary: exit codes and report shape.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lecycle"))
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn tmp_entry(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lecycle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn milnor_isolated_entry() {
    let out = bin()
        .args(["milnor"])
        .arg(corpus_dir().join("a2-curve.corpus"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["payload"]["milnor"], serde_json::json!(2));
    assert_eq!(v["payload"]["kind"], serde_json::json!("milnor"));
    assert_eq!(v["payload"]["schema"], serde_json::json!(1));
}

#[test]
fn milnor_non_isolated_exits_2() {
    let path = tmp_entry(
        "non-isolated.corpus",
        "name = non-isolated\nvariables = x y\nf = x^2*y^2\nexpected_s = 0\nframe = identity\n",
    );
    let out = bin().args(["milnor"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("infinite local length"));
}

#[test]
fn malformed_polynomial_exits_1_with_position() {
    let path = tmp_entry(
        "malformed.corpus",
        "name = malformed\nvariables = x y\nf = x^2 + + y\nexpected_s = 0\nframe = identity\n",
    );
    let out = bin().args(["milnor"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("position"), "{}", stderr(&out));
}

#[test]
fn le_numbers_at_point() {
    let out = bin()
        .args(["le-numbers"])
        .arg(corpus_dir().join("line-a2.corpus"))
        .args(["--point", "1,0,0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["payload"]["profile"]["lambdas"], serde_json::json!([0, 2]));
    assert_eq!(v["payload"]["dagger"]["ok"], serde_json::json!(true));
}

#[test]
fn check_passes_on_pinned_entry() {
    let out = bin()
        .args(["check"])
        .arg(corpus_dir().join("line-a2.corpus"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
}

#[test]
fn check_corrupted_expectation_exits_5() {
    let original =
        std::fs::read_to_string(corpus_dir().join("line-a2.corpus")).unwrap();
    let corrupted = original.replace("expect.mu0 = 2", "expect.mu0 = 3");
    assert_ne!(original, corrupted);
    let path = tmp_entry("corrupted.corpus", &corrupted);
    let out = bin().args(["check"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(5));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let mismatches = v["payload"]["mismatches"].as_array().unwrap();
    assert!(mismatches
        .iter()
        .any(|m| m.as_str().unwrap().contains("mu0")));
}

#[test]
fn corpus_empty_dir_exits_0() {
    let dir = std::env::temp_dir().join(format!("lecycle-empty-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = bin().args(["corpus"]).arg(&dir).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["payload"]["total"], serde_json::json!(0));
}

#[test]
fn random_frame_uses_env_seed() {
    let path = tmp_entry(
        "env-seed.corpus",
        "name = env-seed\nvariables = t x y\nf = x^2 + y^3\nexpected_s = 1\nframe = random\n",
    );
    // Without a seed source the entry is unusable.
    let out = bin().args(["le-numbers"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    // LECYCLE_SEED supplies the default.
    let out = bin()
        .args(["le-numbers"])
        .arg(&path)
        .env("LECYCLE_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["payload"]["entry"]["frame_seed"], serde_json::json!(7));
    assert_eq!(v["payload"]["profile"]["lambdas"], serde_json::json!([0, 2]));
}

#[test]
fn unknown_key_rejected() {
    let path = tmp_entry(
        "unknown-key.corpus",
        "name = u\nvariables = x y\nf = x^2 + y^2\nexpected_s = 0\nframe = identity\nbogus = 1\n",
    );
    let out = bin().args(["milnor"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown key"));
}
