use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_protrusionkit"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

const BOWTIE: &str = "5 6\n0 1\n1 2\n0 2\n2 3\n3 4\n2 4\n";
const K3: &str = "3 3\n0 1\n1 2\n0 2\n";

#[test]
fn solve_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", BOWTIE);
    let f = write(dir.path(), "k3.txt", K3);

    let yes = run(&["solve", "--input", &g, "--family", &f, "--k", "1"]);
    assert_eq!(yes.status.code(), Some(0));
    let rep = json(&yes);
    assert_eq!(rep["answer"]["answer"], "YES");
    assert_eq!(rep["answer"]["solution"], serde_json::json!([2]));
    assert!(rep["timings_ms"]["solve"].is_number());

    let no = run(&["solve", "--input", &g, "--family", &f, "--k", "0"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(json(&no)["answer"]["answer"], "NO");

    let oracle = run(&["oracle", "--input", &g, "--family", &f, "--k", "1"]);
    assert_eq!(oracle.status.code(), Some(0));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "3 1\n0 7\n");
    let f = write(dir.path(), "k3.txt", K3);
    let out = run(&["solve", "--input", &bad, "--family", &f, "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));

    let missing = run(&["kernel-eds", "--graph", "/nonexistent/g.txt", "--k", "1"]);
    assert_eq!(missing.status.code(), Some(2));
    assert_eq!(
        run(&["generate", "--kind", "torus", "--n", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["solve"]).status.code(), Some(2));
}

#[test]
fn bad_modulator_is_an_invariant_violation() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let x = write(dir.path(), "x.txt", "0\n");
    let out = run(&[
        "decompose",
        "--graph",
        &g,
        "--modulator",
        &x,
        "--r",
        "2",
        "--t",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn decompose_then_validate() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(
        dir.path(),
        "w.txt",
        "7 12\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n6 0\n6 1\n6 2\n6 3\n6 4\n6 5\n",
    );
    let x = write(dir.path(), "x.txt", "[6]");
    let pd = dir.path().join("pd.json").to_string_lossy().into_owned();
    let out = run(&[
        "decompose",
        "--graph",
        &g,
        "--modulator",
        &x,
        "--r",
        "3",
        "--t",
        "3",
        "--output",
        &pd,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rep = json(&out);
    assert!(rep["stats"]["y0"].as_u64().unwrap() >= 1);
    let v = run(&["validate", "--graph", &g, "--protrusion", &pd]);
    assert_eq!(v.status.code(), Some(0));

    let broken = write(
        dir.path(),
        "broken.json",
        r#"{"y0": [6], "clusters": [[0, 1, 2]], "beta": 9, "r": 3, "t": 3}"#,
    );
    assert_eq!(
        run(&["validate", "--graph", &g, "--protrusion", &broken])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn generate_is_deterministic_and_writes_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for p in [&a, &b] {
        let out = run(&[
            "generate",
            "--kind",
            "planted-fvs",
            "--n",
            "14",
            "--k",
            "2",
            "--seed",
            "5",
            "--output",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let side: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("a.txt.planted.json")).unwrap())
            .unwrap();
    assert_eq!(side["k"], 2);
    assert_eq!(side["seed"], 5);
    assert_eq!(side["solution"].as_array().unwrap().len(), 2);

    let stdout = run(&["generate", "--kind", "cycle", "--n", "6", "--seed", "1"]);
    assert!(String::from_utf8_lossy(&stdout.stdout).starts_with("6 6"));
}

#[test]
fn bench_rows_follow_corpus() {
    let empty = tempfile::tempdir().unwrap();
    let out = run(&["bench", "--corpus", empty.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 1);

    let dir = tempfile::tempdir().unwrap();
    for seed in 0..10 {
        let p = dir.path().join(format!("i{seed}.txt"));
        run(&[
            "generate",
            "--kind",
            "planted-fvs",
            "--n",
            "12",
            "--k",
            "1",
            "--seed",
            &seed.to_string(),
            "--output",
            p.to_str().unwrap(),
        ]);
    }
    let csv = dir.path().join("bench.csv");
    let out = Command::new(env!("CARGO_BIN_EXE_protrusionkit"))
        .args([
            "bench",
            "--corpus",
            dir.path().to_str().unwrap(),
            "--output",
            csv.to_str().unwrap(),
        ])
        .env("PROTRUSIONKIT_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&csv).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().all(|r| r.contains("true")));
}

#[test]
fn bounds_and_kernel() {
    let out = run(&["bounds", "--k", "2", "--r", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["answer"]["eds_kernel"].as_f64().unwrap() > 0.0);

    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "star.txt", "6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n");
    let out = run(&["kernel-eds", "--graph", &g, "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[
        "kernel-eds",
        "--graph",
        &write(dir.path(), "m.txt", "6 3\n0 1\n2 3\n4 5\n"),
        "--k",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
