use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_geoshapley"));
    c.env_remove("GEOSHAPLEY_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn values(out: &Output) -> Vec<f64> {
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    v["values"].as_array().unwrap().iter().map(|e| e["shapley"].as_f64().unwrap()).collect()
}

fn close(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12)
}

#[test]
fn airport_golden_from_csv_and_json() {
    let dir = TempDir::new().unwrap();
    let csv = write(&dir, "a.csv", "# runway lengths\nx\n2\n1\n3\n");
    let json = write(&dir, "a.json", r#"{"points": [[2], [1], [3]]}"#);
    for input in [&csv, &json] {
        let out = run(&["compute", "--game", "airport", "--input", input]);
        assert!(out.status.success());
        assert!(close(&values(&out), &[5.0 / 6.0, 1.0 / 3.0, 11.0 / 6.0]));
    }
}

#[test]
fn triangle_and_chain_goldens() {
    let dir = TempDir::new().unwrap();
    let tri = write(&dir, "t.csv", "0,0\n1,0\n0,1\n");
    let out = run(&["compute", "--game", "hull-area", "--input", &tri]);
    assert!(close(&values(&out), &[1.0 / 6.0; 3]));
    let chain = write(&dir, "c.csv", "1,1\n2,2\n");
    for extra in [&[][..], &["--chain"], &["--no-chain"], &["--algorithm", "quadratic"]] {
        let mut args = vec!["compute", "--game", "anchored-rects", "--input", &chain];
        args.extend_from_slice(extra);
        let out = run(&args);
        assert!(out.status.success(), "{extra:?}");
        assert!(close(&values(&out), &[0.5, 3.5]));
    }
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let line = write(&dir, "l.csv", "0,0\n1,1\n2,2\n");
    assert_eq!(run(&["compute", "--game", "hull-area", "--input", &line]).status.code(), Some(2));
    let big: String = (0..11).map(|i| format!("{},{}\n", i, (i * i) % 7)).collect();
    let big = write(&dir, "b.csv", &big);
    let out = run(&["compute", "--game", "interval-length", "--input", &big, "--algorithm", "oracle-perm"]);
    assert_eq!(out.status.code(), Some(3));
    let missing = dir.path().join("nope.csv");
    let out = run(&["compute", "--game", "airport", "--input", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(run(&["compute", "--game", "no-such-game", "--input", &line]).status.code(), Some(1));
    let axis = write(&dir, "x.csv", "0,1\n1,2\n");
    assert_eq!(run(&["compute", "--game", "anchored-rects", "--input", &axis]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--games", "hull-area", "--instances", "3", "--inject-fault"]).status.code(), Some(4));
    assert_eq!(run(&["verify", "--games", "airport,hull-area", "--instances", "3"]).status.code(), Some(0));
}

#[test]
fn csv_output_reads_back() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "p.csv", "0.3,0.7\n1.25,0.1\n0.9,2.5\n2.2,1.4\n");
    let first = dir.path().join("first.csv");
    let args = |input: &str, out: &Path| {
        run(&[
            "compute", "--game", "bbox-area", "--input", input, "--format", "csv", "--no-timing", "--output",
            out.to_str().unwrap(),
        ])
    };
    assert!(args(&pts, &first).status.success());
    let second = dir.path().join("second.csv");
    assert!(args(first.to_str().unwrap(), &second).status.success());
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());
}

#[test]
fn json_numbers_round_trip() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "p.csv", "0.1,0.2\n0.7,0.3\n0.4,0.9\n");
    let out = run(&["compute", "--game", "disk-area", "--input", &pts, "--algorithm", "oracle-subset"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let total: f64 = values(&out).iter().sum();
    assert!((total - v["total"].as_f64().unwrap()).abs() < 1e-12);
    assert_eq!(v["values"][1]["point"][0].as_f64(), Some(0.7));
    assert!(v["wall_time_ms"].as_f64().is_some());
}

#[test]
fn thread_count_does_not_change_output() {
    let dir = TempDir::new().unwrap();
    let text: String = (0..300)
        .map(|i| {
            let t = i as f64 * 0.7548776662466927;
            format!("{},{}\n", (t * 1.3).fract() + 0.01, (t * 2.1).fract() + 0.01)
        })
        .collect();
    let pts = write(&dir, "p.csv", &text);
    let base = ["compute", "--game", "anchored-bbox-area", "--input", &pts, "--no-timing"];
    let reference = run(&base).stdout;
    for threads in ["1", "2", "4"] {
        let mut args = base.to_vec();
        args.extend(["--threads", threads]);
        assert_eq!(run(&args).stdout, reference);
        let out = bin().args(base).env("GEOSHAPLEY_THREADS", threads).output().unwrap();
        assert_eq!(out.stdout, reference);
    }
}

#[test]
fn bench_reports_slope() {
    let out = run(&["bench", "--game", "hull-area", "--start", "64", "--steps", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("n,seconds\n64,"));
    assert!(text.contains("slope="));
}
