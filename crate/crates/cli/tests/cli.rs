use std::path::{Path, PathBuf};

use genlink_cli::run_command;
use serde_json::Value;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("genlink").chain(args.iter().copied());
    let code = run_command(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("timing_ms");
            m.values_mut().for_each(strip_timing);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

fn read_json(p: &Path) -> Value {
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
    strip_timing(&mut v);
    v
}

#[test]
fn mono_lct_of_skew_lines() {
    let (code, out, _) = run(&["mono", "lct", "--input", corpus("skew_lines.ideal").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "2");
}

#[test]
fn link_report_shape() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let (code, _, err) = run(&[
        "link",
        "--input",
        corpus("twisted_cubic.ideal").to_str().unwrap(),
        "--seed",
        "42",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let v = read_json(&out);
    for key in ["version", "seed", "input", "link", "checks"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    for key in ["situation", "degrees", "IV_gens", "IY_gens", "empty", "retries"] {
        assert!(v["link"].get(key).is_some(), "missing link.{key}");
    }
    assert_eq!(v["seed"], 42);
    assert_eq!(v["link"]["degrees"], serde_json::json!([2, 2]));
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    assert!(checks.iter().any(|c| c["name"] == "omega_formula" && c["status"] == "pass"));
}

#[test]
fn same_seed_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let input = corpus("skew_lines.ideal");
    let mut reports = Vec::new();
    for k in 0..2 {
        let p = dir.path().join(format!("r{k}.json"));
        let (code, _, _) = run(&["link", "--input", input.to_str().unwrap(), "--seed", "7", "--out", p.to_str().unwrap()]);
        assert_eq!(code, 0);
        reports.push(read_json(&p));
    }
    assert_eq!(
        serde_json::to_string(&reports[0]).unwrap(),
        serde_json::to_string(&reports[1]).unwrap()
    );
}

#[test]
fn parse_errors_exit_2_with_position() {
    let (code, _, err) = run(&["gb", "--input", data("bad_syntax.ideal").to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3, column 17"), "{err}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["link"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    let input = corpus("twisted_cubic.ideal");
    assert_eq!(run(&["link", "--input", input.to_str().unwrap(), "--situation", "Z"]).0, 2);
    assert_eq!(run(&["link", "--input", input.to_str().unwrap(), "--char", "4"]).0, 2);
    assert_eq!(run(&["gb", "--input", "/nonexistent/file.ideal"]).0, 2);
}

#[test]
fn mixed_degrees_in_situation_b_fail() {
    let input = corpus("twisted_cubic.ideal");
    let (code, _, _) = run(&["link", "--input", input.to_str().unwrap(), "--situation", "B"]);
    assert_eq!(code, 0);
    let input = corpus("ci_2_3.ideal");
    let (code, _, err) = run(&["link", "--input", input.to_str().unwrap(), "--situation", "B"]);
    assert_ne!(code, 0);
    assert!(!err.is_empty());
}

#[test]
fn tiny_budget_exits_4() {
    let input = corpus("rational_quartic.ideal");
    let (code, _, err) = run(&["link", "--input", input.to_str().unwrap(), "--budget", "1"]);
    assert_eq!(code, 4, "{err}");
}

#[test]
fn res_prints_betti_table() {
    let (code, out, _) = run(&["res", "--input", corpus("twisted_cubic.ideal").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("regularity: 2"), "{out}");
}

#[test]
fn seq_runs_and_checks() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("s.json");
    let (code, _, err) = run(&[
        "seq",
        "--input",
        corpus("twisted_cubic.ideal").to_str().unwrap(),
        "--steps",
        "2",
        "--out",
        p.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let v = read_json(&p);
    let degs: Vec<u64> = v["steps"].as_array().unwrap().iter().map(|s| s["degree"].as_u64().unwrap()).collect();
    assert_eq!(degs, vec![3, 1, 3]);
}

fn write_manifest(dir: &Path, include_bad: bool) -> PathBuf {
    let mut text = format!(
        "[[entry]]\nname = \"cubic\"\nfile = {:?}\n\n[[entry]]\nname = \"skew\"\nfile = {:?}\n",
        corpus("twisted_cubic.ideal"),
        corpus("skew_lines.ideal")
    );
    if include_bad {
        text.push_str(&format!("\n[[entry]]\nname = \"broken\"\nfile = {:?}\n", data("bad_syntax.ideal")));
        text.push_str(&format!("\n[[entry]]\nname = \"points\"\nfile = {:?}\n", corpus("three_points.ideal")));
    }
    let p = dir.join("manifest.toml");
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn corrupted_entry_is_reported_and_others_run() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_manifest(dir.path(), true);
    let out = dir.path().join("c.json");
    let (code, _, _) = run(&["corpus", "--input", m.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code, 1);
    let v = read_json(&out);
    let entries = v["entries"].as_array().unwrap();
    let status: Vec<&str> = entries.iter().map(|e| e["status"].as_str().unwrap()).collect();
    assert_eq!(status, vec!["pass", "pass", "error", "pass"]);
    assert!(entries[2]["error"].as_str().unwrap().contains("line 3"));
    assert_eq!(v["summary"]["error_entries"], 1);
}

#[test]
fn clean_corpus_exits_0_and_parallelism_is_invisible() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_manifest(dir.path(), false);
    let mut reports = Vec::new();
    for par in ["1", "3"] {
        let out = dir.path().join(format!("c{par}.json"));
        let (code, _, _) = run(&["corpus", "--input", m.to_str().unwrap(), "--parallel", par, "--out", out.to_str().unwrap()]);
        assert_eq!(code, 0);
        reports.push(serde_json::to_string(&read_json(&out)).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
}
