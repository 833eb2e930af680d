use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn qschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschur")).args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let p = dir.join(name);
    std::fs::write(&p, v.to_string()).unwrap();
    p.to_str().unwrap().to_owned()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn verify_single_suite_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("even.json");
    let out = qschur(&["verify", "--suite", "even", "--n", "2", "--r", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let line = String::from_utf8(out.stdout).unwrap();
    assert!(line.starts_with("PASS even n=2 r=3:"), "{line}");
    let rep: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(rep["suite"], "even");
    assert_eq!(rep["failures"], json!([]));
    assert!(rep["cases"].as_u64().unwrap() > 0);
}

#[test]
fn verify_sampled_with_jobs() {
    let out = qschur(&["verify", "--suite", "odd-head", "--n", "2", "--r", "3", "--sample", "40", "--seed", "5", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let line = String::from_utf8(out.stdout).unwrap();
    assert!(line.contains("40 cases") && line.contains("seed 5"), "{line}");
}

#[test]
fn verify_rejects_bad_arguments() {
    for args in [
        &["verify", "--suite", "even", "--n", "0", "--r", "3"][..],
        &["verify", "--suite", "even", "--n", "2", "--r", "9"],
        &["verify", "--suite", "even", "--n", "2", "--r", "3", "--jobs", "0"],
        &["verify", "--suite", "even", "--n", "2", "--r", "3", "--sample", "0"],
        &["verify", "--suite", "odd", "--n", "2", "--r", "3"],
        &["frobnicate"],
    ] {
        assert_eq!(qschur(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn query_products() {
    let dir = tempfile::tempdir().unwrap();
    let odd = write(dir.path(), "odd.json", &json!({"n": 1, "a0": [[0]], "a1": [[1]]}));
    let out = qschur(&["query", &odd, &odd]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out), json!([{"a0": [[1]], "a1": [[0]], "coeff": {"0": -1}}]));

    let a = json!({"n": 2, "a0": [[1, 0], [1, 0]], "a1": [[0, 1], [0, 0]]});
    let a_path = write(dir.path(), "a.json", &a);
    let id = write(dir.path(), "id.json", &json!({"n": 2, "a0": [[2, 0], [0, 1]], "a1": [[0, 0], [0, 0]]}));
    let out = qschur(&["query", &id, &a_path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out), json!([{"a0": a["a0"], "a1": a["a1"], "coeff": {"0": 1}}]));

    let other = write(dir.path(), "other.json", &json!({"n": 2, "a0": [[3, 0], [0, 0]], "a1": [[0, 0], [0, 0]]}));
    let out = qschur(&["query", &other, &a_path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out), json!([]));
}

#[test]
fn query_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", &json!({"n": 1, "a0": [[1]], "a1": [[0]]}));
    let b = write(dir.path(), "b.json", &json!({"n": 2, "a0": [[1, 0], [0, 0]], "a1": [[0, 0], [0, 0]]}));
    let two = write(dir.path(), "two.json", &json!({"n": 1, "a0": [[0]], "a1": [[2]]}));
    let extra = write(dir.path(), "extra.json", &json!({"n": 1, "a0": [[1]], "a1": [[0]], "b": 1}));
    let missing = dir.path().join("missing.json");
    for (x, y) in [(&a, &b), (&two, &a), (&extra, &a), (&a, &missing.to_str().unwrap().to_owned())] {
        let out = qschur(&["query", x, y]);
        assert_eq!(out.status.code(), Some(2), "{x} {y}");
    }
}
