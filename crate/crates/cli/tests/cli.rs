use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_centraliser"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = path(dir, name);
    fs::write(Path::new(&p), text).unwrap();
    p
}

#[test]
fn worked_examples_match() {
    let out = run(&["examples"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&["paper-examples", "--print"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("c(3,2,1) = X_{(1,2,3),(3,2,1)}"));
}

#[test]
fn basis_listing() {
    let out = run(&["basis", "--side", "schur", "--n", "2", "--r", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1,2,3 0\n1,3,2 1\n2,1,3 1\n2,3,1 2\n3,1,2 2\n");
    let out = run(&["basis", "--side", "partition", "--n", "3", "--r", "2", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["format"], 1);
    assert_eq!(doc["elements"].as_array().unwrap().len(), 6);
}

#[test]
fn map_prints_selector() {
    let out = run(&["map", "--side", "partition", "--n", "3", "--r", "1", "--perm", "2,1,3"]);
    assert_eq!(stdout(&out), "1\n2\n");
    let out = run(&["map", "--side", "schur", "--n", "3", "--r", "3", "--perm", "2,3,1", "--stable-fastpath"]);
    assert_eq!(stdout(&out), "1,2,3\n3,1,2\n");
}

#[test]
fn decompose_single_basis_matrix() {
    let dir = TempDir::new().unwrap();
    // rep(3,2,1) on [3]^3: place action reverses the index
    let mut entries = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 1..=3 {
                entries.push(format!("[\"{a},{b},{c}\",\"{c},{b},{a}\",\"1\"]"));
            }
        }
    }
    let x = write(&dir, "x.json", &format!("{{\"format\":1,\"n\":3,\"r\":3,\"entries\":[{}]}}", entries.join(",")));
    for extra in [&[][..], &["--explicit-inverse"], &["--stable-fastpath"]] {
        let mut args = vec!["decompose", "--side", "schur", "--n", "3", "--r", "3", "--input", &x];
        args.extend_from_slice(extra);
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(doc["coefficients"], serde_json::json!({"3,2,1": "1"}));
    }
}

#[test]
fn random_decompose_verify_oracle_agree() {
    let dir = TempDir::new().unwrap();
    let (x, truth, got) = (path(&dir, "x.json"), path(&dir, "truth.json"), path(&dir, "c.json"));
    let shape = ["--side", "partition", "--n", "3", "--r", "2"];
    let mut args = vec!["random", "--seed", "11", "--output", &x, "--coefficients", &truth];
    args.extend_from_slice(&shape);
    assert_eq!(run(&args).status.code(), Some(0));

    let mut args = vec!["decompose", "--input", &x, "--output", &got];
    args.extend_from_slice(&shape);
    assert_eq!(run(&args).status.code(), Some(0));
    assert_eq!(fs::read_to_string(&got).unwrap(), fs::read_to_string(&truth).unwrap());

    let mut args = vec!["oracle", "--input", &x];
    args.extend_from_slice(&shape);
    assert_eq!(stdout(&run(&args)), fs::read_to_string(&truth).unwrap());

    let mut args = vec!["verify", "--input", &x, "--coefficients", &got];
    args.extend_from_slice(&shape);
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "ok\n");
}

#[test]
fn order_override() {
    let dir = TempDir::new().unwrap();
    let good = write(&dir, "order.txt", "# degree 3\n1,2,3\n2,1,3\n1,3,2\n2,3,1\n3,1,2\n3,2,1\n");
    let out = run(&["matrix", "--side", "schur", "--n", "3", "--r", "3", "--order", &good, "--inverse"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("p | (1,2,3)  (2,1,3)"));
    let bad = write(&dir, "bad.txt", "3,2,1\n1,2,3\n2,1,3\n1,3,2\n2,3,1\n3,1,2\n");
    let out = run(&["matrix", "--side", "schur", "--n", "3", "--r", "3", "--order", &bad]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn matrix_json_has_inverse() {
    let out = run(&["matrix", "--side", "schur", "--n", "2", "--r", "3", "--inverse", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["format"], 1);
    assert_eq!(doc["A"].as_array().unwrap().len(), 5);
    assert_eq!(doc["A_inverse"][0][0], "1");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let outside = write(&dir, "out.json", r#"{"format":1,"n":2,"r":2,"entries":[["1,1","1,2","1"]]}"#);
    let out = run(&["decompose", "--side", "schur", "--n", "2", "--r", "2", "--input", &outside]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("X[(1,1),(1,2)]"));
    let out = run(&["oracle", "--side", "schur", "--n", "2", "--r", "2", "--input", &outside]);
    assert_eq!(out.status.code(), Some(2));

    let coeffs = write(&dir, "c.json", r#"{"format":1,"side":"schur","n":2,"r":2,"coefficients":{"2,1":"1"}}"#);
    let out = run(&["verify", "--side", "schur", "--n", "2", "--r", "2", "--input", &outside, "--coefficients", &coeffs]);
    assert_eq!(out.status.code(), Some(2));

    let malformed = write(&dir, "bad.json", "{");
    let out = run(&["decompose", "--side", "schur", "--n", "2", "--r", "2", "--input", &malformed]);
    assert_eq!(out.status.code(), Some(3));
    let wrong_version = write(&dir, "v2.json", r#"{"format":2,"n":2,"r":2,"entries":[]}"#);
    let out = run(&["decompose", "--side", "schur", "--n", "2", "--r", "2", "--input", &wrong_version]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["decompose", "--side", "schur", "--n", "2", "--r", "2", "--input", &path(&dir, "missing.json")]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(run(&["basis", "--side", "nope", "--n", "2", "--r", "2"]).status.code(), Some(3));
    assert_eq!(run(&["map", "--side", "schur", "--n", "2", "--r", "3", "--perm", "3,2,1"]).status.code(), Some(3));
    assert_eq!(
        run(&["map", "--side", "partition", "--n", "3", "--r", "2", "--stable-fastpath", "--perm", "1,2,3"]).status.code(),
        Some(3)
    );

    assert_eq!(run(&["basis", "--side", "schur", "--n", "3", "--r", "12"]).status.code(), Some(4));
    assert_eq!(
        run(&["basis", "--side", "schur", "--n", "3", "--r", "4", "--max-group-order", "10"]).status.code(),
        Some(4)
    );
    assert_eq!(
        run(&["random", "--side", "schur", "--n", "3", "--r", "3", "--max-dimension", "8"]).status.code(),
        Some(4)
    );
}

#[test]
fn seeded_output_is_deterministic() {
    let a = run(&["random", "--side", "schur", "--n", "2", "--r", "4", "--seed", "3"]);
    let b = run(&["random", "--side", "schur", "--n", "2", "--r", "4", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(doc["format"], 1);
}
