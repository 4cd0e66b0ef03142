use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use circ_iso_cli::{run_grid, Options, Request};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_circ-iso"))
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(dir).unwrap();
    dir.join(name)
}

#[test]
fn tables_match_golden() {
    for (graph, file) in [
        ("C81(1,3,26,28)", "theta_c81_1_3_26_28.txt"),
        ("C81(3,7,20,34)", "theta_c81_3_7_20_34.txt"),
    ] {
        let g = golden(file);
        let out = run(&[
            "theta-table",
            graph,
            "--r",
            "3",
            "--golden",
            g.to_str().unwrap(),
        ]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn annexure_matches_golden() {
    for (p, n) in [("3", "1"), ("3", "2"), ("3", "3"), ("5", "1")] {
        let g = golden(&format!("annexure_p{p}_n{n}.txt"));
        let out = run(&[
            "annexure",
            "--p",
            p,
            "--n",
            n,
            "--golden",
            g.to_str().unwrap(),
        ]);
        assert!(
            out.status.success(),
            "p={p} n={n}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn perturbed_golden_fails_with_line_diff() {
    let text = std::fs::read_to_string(golden("theta_c81_1_3_26_28.txt")).unwrap();
    let bad = text.replacen("10 3 44 37", "10 3 44 38", 1);
    let path = scratch("theta_perturbed.txt");
    std::fs::write(&path, bad).unwrap();
    let out = run(&[
        "theta-table",
        "C81(1,3,26,28)",
        "--r",
        "3",
        "--golden",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 5"), "{err}");
}

#[test]
fn missing_golden_is_an_input_error() {
    let out = run(&[
        "annexure",
        "--p",
        "3",
        "--n",
        "1",
        "--golden",
        "/nonexistent/golden.txt",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["orbit", "C54(0,3)"]).status.code(), Some(2));
    assert_eq!(
        run(&["t2group", "C27(1,2)", "--r", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["family", "--p", "2", "--n", "1", "--x", "1", "--y", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["ci-scan", "C81(1,3,26,28)", "--max-candidates", "10"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["orbit", "C54(1,17,18,19)"]).status.code(), Some(0));
}

#[test]
fn classify_json_shape() {
    let out = run(&[
        "--format",
        "json",
        "classify",
        "--g1",
        "C54(1,3,17,19)",
        "--g2",
        "C54(5,13,21,23)",
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["command"], "classify");
    assert_eq!(v["result"]["verdict"]["kind"], "Composite");
    assert_eq!(v["result"]["certificate_verified"], true);
    assert_eq!(v["provenance"]["oracle_budget"], 10_000_000);
}

#[test]
fn grid_is_sorted_and_thread_count_independent() {
    let requests = vec![
        Request::Annexure { p: 3, n: 1 },
        Request::Classify {
            g1: "C48(1,2,23)".into(),
            g2: "C48(2,11,13)".into(),
        },
        Request::T2group {
            graph: "C27(1,2)".into(),
            r: 3,
        },
        Request::Orbit {
            graph: "C54(1,17,18,19)".into(),
            r: Some(3),
        },
    ];
    let path = scratch("grid.json");
    std::fs::write(&path, serde_json::to_string(&requests).unwrap()).unwrap();
    let one = bin()
        .env("CIRC_ISO_THREADS", "1")
        .args(["grid", path.to_str().unwrap()])
        .output()
        .unwrap();
    let four = bin()
        .env("CIRC_ISO_THREADS", "4")
        .args(["grid", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);

    let v: Value = serde_json::from_slice(&one.stdout).unwrap();
    let commands: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["command"].as_str().unwrap())
        .collect();
    assert_eq!(commands, ["annexure", "classify", "orbit", "t2group"]);
    // The failing cell is reported, not fatal.
    assert_eq!(v[3]["result"]["exit_code"], 2);
}

#[test]
fn empty_grid() {
    assert!(run_grid(&[], &Options::default()).unwrap().is_empty());
    let path = scratch("empty.json");
    std::fs::write(&path, "[]").unwrap();
    let out = run(&["grid", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "[]");
}

#[test]
fn presets_run() {
    let out = run(&["grid", "--preset", "verify-family-p3"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 30);
    assert!(reports.iter().all(|r| r["result"]["group_order"] == 3));
    assert_eq!(run(&["grid", "--preset", "nope"]).status.code(), Some(2));
}
