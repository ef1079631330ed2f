mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use common::WORKED_LP;
use serde_json::Value;

fn afsimplex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_afsimplex"))
        .args(args)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn file(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn worked_example_solve() {
    let dir = tempfile::tempdir().unwrap();
    let lp = file(dir.path(), "p9.lp", WORKED_LP);
    let trace = dir.path().join("t.json");
    let out = afsimplex(&[
        "solve",
        lp.to_str().unwrap(),
        "--method",
        "af",
        "--tie",
        "smallest-abs-pivot",
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("status: unbounded"));
    assert!(stdout(&out).contains("phase 1 (af): 3 pivots, 0 degenerate, feasible"));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(trace).unwrap()).unwrap();
    assert_eq!(doc["phase1"]["pivots"], 3);
    assert_eq!(doc["certificates"]["unbounded"]["entering"], "w3");
}

#[test]
fn worked_example_compare() {
    let dir = tempfile::tempdir().unwrap();
    let lp = file(dir.path(), "p9.lp", WORKED_LP);
    let report = dir.path().join("r.json");
    let out = afsimplex(&["compare", lp.to_str().unwrap(), "--report", report.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(doc["af"]["pivots"], 3);
    assert_eq!(doc["traditional"]["pivots"], 5);
    assert_eq!(doc["traditional"]["degenerate_pivots"], 2);
    assert_eq!(doc["verdicts_equal"], true);
    assert_eq!(doc["corners_equal"], true);
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&afsimplex(&[])), 64);
    assert_eq!(code(&afsimplex(&["frobnicate"])), 64);
    assert_eq!(code(&afsimplex(&["solve"])), 64);
    assert_eq!(code(&afsimplex(&["solve", "/definitely/not/here.lp"])), 64);
    let dir = tempfile::tempdir().unwrap();
    let lp = file(dir.path(), "p9.lp", WORKED_LP);
    let lp = lp.to_str().unwrap();
    assert_eq!(code(&afsimplex(&["solve", lp, "--method", "simplex"])), 64);
    assert_eq!(code(&afsimplex(&["solve", lp, "--eps", "-1"])), 64);
    assert_eq!(code(&afsimplex(&["solve", lp, "--max-iters", "many"])), 64);
    let bad = afsimplex(&["solve", lp, "--tie", "random"]);
    assert_eq!(code(&bad), 64);
    assert!(!bad.stderr.is_empty());
}

#[test]
fn help_and_version_exit_0() {
    let help = afsimplex(&["--help"]);
    assert_eq!(code(&help), 0);
    assert!(stdout(&help).contains("solve"));
    assert_eq!(code(&afsimplex(&["--version"])), 0);
    assert_eq!(code(&afsimplex(&["gen", "--help"])), 0);
}

#[test]
fn parse_errors_exit_65_with_position() {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in [
        ("rel.lp", "max: x;\nc1: x <> 1;\n"),
        ("empty.lp", "max: ;\nc1: x <= 1;\n"),
        ("noc.lp", "max: x;\n"),
        ("dup.lp", "max: x;\nc: x <= 1;\nc: x <= 2;\n"),
    ] {
        let lp = file(dir.path(), name, text);
        let out = afsimplex(&["solve", lp.to_str().unwrap()]);
        assert_eq!(code(&out), 65, "{name}");
        assert!(!out.stderr.is_empty(), "{name}");
    }
    let lp = file(dir.path(), "pos.lp", "max: x;\nc1: x <> 1;\n");
    let err = String::from_utf8(afsimplex(&["solve", lp.to_str().unwrap()]).stderr).unwrap();
    assert!(err.contains("2:"), "{err}");
}

#[test]
fn iteration_cap_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let lp = file(dir.path(), "p9.lp", WORKED_LP);
    let out = afsimplex(&["solve", lp.to_str().unwrap(), "--max-iters", "1", "--quiet"]);
    assert_eq!(code(&out), 3);
    assert!(out.stdout.is_empty());
}

#[test]
fn float_mode_agrees_on_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let lp = file(dir.path(), "p9.lp", WORKED_LP);
    for method in ["af", "trad"] {
        let out = afsimplex(&[
            "solve",
            lp.to_str().unwrap(),
            "--numeric",
            "float",
            "--eps",
            "1e-9",
            "--method",
            method,
        ]);
        assert_eq!(code(&out), 2);
    }
}

#[test]
fn generated_files_are_deterministic_and_agree_with_the_oracle() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..24u64 {
        let shape = ["feasible", "infeasible", "degenerate"][(seed % 3) as usize];
        let seed_s = seed.to_string();
        let paths: Vec<PathBuf> = ["a", "b"]
            .iter()
            .map(|n| dir.path().join(format!("{n}{seed}.lp")))
            .collect();
        for path in &paths {
            let args = [
                "gen",
                "--seed",
                &seed_s,
                "--rows",
                "4",
                "--cols",
                "3",
                "--shape",
                shape,
                "--out",
                path.to_str().unwrap(),
            ];
            assert_eq!(code(&afsimplex(&args)), 0);
        }
        let text = std::fs::read(&paths[0]).unwrap();
        assert_eq!(text, std::fs::read(&paths[1]).unwrap());
        let lp = paths[0].to_str().unwrap();
        let oracle = afsimplex(&["oracle", lp, "--quiet"]);
        for method in ["af", "trad"] {
            let solved = afsimplex(&["solve", lp, "--method", method, "--quiet"]);
            assert_eq!(code(&solved), code(&oracle), "seed {seed} {method}");
        }
        let a = afsimplex(&["solve", lp]);
        assert_eq!(a.stdout, afsimplex(&["solve", lp]).stdout);
    }
}

#[test]
fn gen_rejects_bad_ranges() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.lp");
    let out = out.to_str().unwrap();
    let base = ["gen", "--seed", "1", "--cols", "2", "--out", out];
    assert_eq!(code(&afsimplex(&[&base[..], &["--rows", "0"]].concat())), 64);
    assert_eq!(
        code(&afsimplex(
            &[&base[..], &["--rows", "2", "--coeff-min", "3", "--coeff-max", "-3"]].concat()
        )),
        64
    );
    assert_eq!(
        code(&afsimplex(&[&base[..], &["--rows", "2", "--shape", "weird"]].concat())),
        64
    );
}

#[test]
fn oracle_reports_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let lp = file(dir.path(), "box.lp", "max: x + y; a: x <= 2; b: y <= 3;");
    let out = afsimplex(&["oracle", lp.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(doc["optimum"]["value"], serde_json::json!({"num": 5, "den": 1}));
}
