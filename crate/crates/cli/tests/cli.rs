use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

use xcomplex::group::{cyclic_group, symmetric_group_3, FiniteGroup};

struct Run {
    code: i32,
    report: Value,
    stderr: String,
}

fn run(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_xcomplex"));
    cmd.args(args).env_remove("XCOMPLEX_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let Output { status, stdout, stderr } = cmd.output().unwrap();
    let report = serde_json::from_slice(&stdout).unwrap_or(Value::Null);
    Run { code: status.code().unwrap(), report, stderr: String::from_utf8_lossy(&stderr).into_owned() }
}

fn write(dir: &Path, name: &str, v: &Value) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string_pretty(v).unwrap()).unwrap();
    path
}

fn group_doc(g: &FiniteGroup) -> Value {
    json!({ "order": g.order(), "mul": g.table() })
}

fn s3_doc() -> Value {
    json!({ "L": 1, "groups": [group_doc(&symmetric_group_3())], "boundaries": [], "actions": [] })
}

fn torus_doc() -> Value {
    json!({ "cells": [1, 2, 1], "attach": { "2": [[[0, 1], [1, 1], [0, -1], [1, -1]]] } })
}

fn fixtures() -> (TempDir, String, String) {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "torus.json", &torus_doc());
    let a = write(dir.path(), "s3.json", &s3_doc());
    (dir, p.to_str().unwrap().to_owned(), a.to_str().unwrap().to_owned())
}

fn path_str(p: PathBuf) -> String {
    p.to_str().unwrap().to_owned()
}

#[test]
fn valid_documents_validate() {
    let (dir, p, a) = fixtures();
    let g = path_str(write(dir.path(), "g.json", &group_doc(&symmetric_group_3())));
    let r = run(&["validate", "--presentation", &p, "--complex", &a, "--group", &g], &[]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.report["ok"], json!(true));
    assert_eq!(r.report["result"]["complex"]["ok"], json!(true));
    assert_eq!(r.report["inputs"].as_array().unwrap().len(), 3);
}

#[test]
fn malformed_json_is_a_parse_error_with_position() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\n  \"cells\": [1, 2,\n  oops ]\n}").unwrap();
    let r = run(&["validate", "--presentation", path.to_str().unwrap()], &[]);
    assert_eq!(r.code, 1);
    assert_eq!(r.report["error"]["kind"], json!("parse"));
    assert_eq!(r.report["error"]["line"], json!(3));
    assert!(r.report["error"]["column"].as_u64().unwrap() > 0);
}

#[test]
fn wrong_shape_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let p = path_str(write(dir.path(), "p.json", &json!({ "cells": [1, 1], "attach": { "2": [[[0, "x"]]] } })));
    let r = run(&["validate", "--presentation", &p], &[]);
    assert_eq!(r.code, 1);
    assert!(r.report["error"]["line"].as_u64().is_some());
}

#[test]
fn planted_peiffer_violation_is_reported() {
    // S3 over the trivial group with trivial action: CM1 holds, Peiffer fails
    let dir = TempDir::new().unwrap();
    let trivial = cyclic_group(1).unwrap();
    let doc = json!({
        "L": 2,
        "groups": [group_doc(&trivial), group_doc(&symmetric_group_3())],
        "boundaries": [[0, 0, 0, 0, 0, 0]],
        "actions": [[[0, 1, 2, 3, 4, 5]]],
    });
    let a = path_str(write(dir.path(), "bad.json", &doc));
    let r = run(&["validate", "--complex", &a], &[]);
    assert_eq!(r.code, 2);
    let violations = r.report["result"]["complex"]["violations"].as_array().unwrap().clone();
    assert_eq!(violations.len(), 1);
    assert_eq!(violations[0]["axiom"], json!("Peiffer"));
    assert_eq!(violations[0]["witness"].as_array().unwrap().len(), 2);
    assert!(r.stderr.contains("Peiffer"));

    let (_d, p, _) = fixtures();
    assert_eq!(run(&["count", "--presentation", &p, "--complex", &a], &[]).code, 2);
}

#[test]
fn non_group_table_is_a_validation_failure() {
    let dir = TempDir::new().unwrap();
    let g = path_str(write(dir.path(), "g.json", &json!({ "order": 2, "mul": [[0, 1], [1, 1]] })));
    let r = run(&["validate", "--group", &g], &[]);
    assert_eq!(r.code, 2);
}

#[test]
fn counts() {
    let (_dir, p, a) = fixtures();
    let r = run(&["count", "--presentation", &p, "--complex", &a, "--oracle"], &[]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.report["result"]["count"], json!("18"));
    assert_eq!(r.report["result"]["oracle"]["agrees"], json!(true));
    for (space, complex, want) in [("sphere(1)", "Z/5", "5"), ("rp2", "Z/3", "1"), ("rp2", "Z/2", "2")] {
        let r = run(&["count", "--presentation", &format!("builtin:{space}"), "--complex", &format!("builtin:{complex}")], &[]);
        assert_eq!(r.report["result"]["count"], json!(want), "{space} {complex}");
    }
}

#[test]
fn enumeration_is_sorted_and_complete() {
    let r = run(&["count", "--presentation", "builtin:rp2", "--complex", "builtin:Z/2", "--enumerate"], &[]);
    assert_eq!(r.report["result"]["morphisms"], json!([[[0]], [[1]]]));
}

#[test]
fn caps_exit_with_three() {
    let (_dir, p, a) = fixtures();
    let r = run(&["count", "--presentation", &p, "--complex", &a, "--enumerate", "--cap", "5"], &[]);
    assert_eq!(r.code, 3);
    assert_eq!(r.report["error"]["kind"], json!("cap"));
    let r = run(&["count", "--presentation", &p, "--complex", &a, "--enumerate"], &[("XCOMPLEX_CAP", "5")]);
    assert_eq!(r.code, 3);
    let r = run(&["classes", "--presentation", &p, "--complex", &a], &[("XCOMPLEX_CAP", "10")]);
    assert_eq!(r.code, 3);
    let r = run(&["count", "--presentation", &p, "--complex", &a], &[("XCOMPLEX_CAP", "five")]);
    assert_eq!(r.code, 1);
}

#[test]
fn oracle_over_cap_is_skipped() {
    let r = run(
        &["count", "--presentation", "builtin:genus_surface(2)", "--complex", "builtin:S3", "--oracle", "--cap", "10"],
        &[],
    );
    assert_eq!(r.code, 0);
    assert!(r.report["result"]["oracle"]["skipped"].is_string());
}

#[test]
fn invariants() {
    let cases = [
        ("point", "(Z/4,Z/2,incl)", "1"),
        ("disk(2)", "(Z/4,Z/2,incl)", "1"),
        ("sphere(1)", "(Z/4,Z/2,incl)", "2"),
        ("point", "(Z/4,Z/2,Z/2)", "1"),
    ];
    for (space, complex, want) in cases {
        let r = run(
            &["invariant", "--presentation", &format!("builtin:{space}"), "--complex", &format!("builtin:{complex}"), "--euler"],
            &[],
        );
        assert_eq!(r.code, 0, "{}", r.stderr);
        assert_eq!(r.report["result"]["invariant"], json!(want), "{space} {complex}");
        assert_eq!(r.report["result"]["euler"], json!(want));
    }
    let r = run(&["invariant", "--presentation", "builtin:sphere(1)", "--complex", "builtin:(Z/4,Z/2,incl)"], &[]);
    assert_eq!(r.report["result"]["normalization"], json!("1/2"));
}

#[test]
fn classes_of_circle_maps() {
    let r = run(&["classes", "--presentation", "builtin:sphere(1)", "--complex", "builtin:(Z/4,Z/2,incl)"], &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["result"]["count"], json!(2));
    assert_eq!(r.report["result"]["sizes"], json!([2, 2]));
    // one colour list per dimension up to L; the circle has no 2-cells
    assert_eq!(r.report["result"]["representatives"], json!([[[0], []], [[1], []]]));
}

#[test]
fn library_lists_builtins() {
    let r = run(&["library"], &[]);
    assert_eq!(r.code, 0);
    assert!(r.stderr.lines().any(|l| l == "torus (1,2,1)"));
    let entries: Vec<&str> =
        r.report["result"]["spaces"].as_array().unwrap().iter().map(|s| s["entry"].as_str().unwrap()).collect();
    assert!(entries.contains(&"torus (1,2,1)"));
}

#[test]
fn reports_are_deterministic() {
    let (_dir, p, a) = fixtures();
    let strip = |mut v: Value| {
        v["timing_ms"] = Value::Null;
        v["command"]["knobs"]["threads"] = Value::Null;
        v
    };
    for cmd in ["count", "invariant", "classes"] {
        let one = run(&[cmd, "--presentation", &p, "--complex", &a, "--threads", "1"], &[]);
        let eight = run(&[cmd, "--presentation", &p, "--complex", &a, "--threads", "8"], &[]);
        let again = run(&[cmd, "--presentation", &p, "--complex", &a, "--threads", "8"], &[]);
        assert_eq!(one.code, 0);
        assert_eq!(strip(one.report), strip(eight.report.clone()));
        assert_eq!(strip(eight.report), strip(again.report));
    }
}

#[test]
fn selfcheck_passes() {
    let r = run(&["selfcheck"], &[]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.report["result"]["criteria"].as_array().unwrap().len(), 9);
}
