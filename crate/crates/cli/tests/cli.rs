use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn target(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn boundwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boundwalk")).args(args).output().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const VERTEX: &str = "dimension = 2\nvertices = [[1.0, 0.0]]\n";
const EDGE: &str = "dimension = 3\nvertices = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]\nedges = [[0, 1]]\n";

#[test]
fn vertex_target_passes() {
    let dir = TempDir::new().unwrap();
    let t = target(&dir, "v.toml", VERTEX);
    let report = dir.path().join("report.txt");
    let out = boundwalk(&["-n", "2", "-t", s(&t), "--phases", "3", "--verify", "--report", s(&report)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&report).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("phase=")).count(), 3);
    assert!(text.contains("overall_pass=true"));
}

#[test]
fn vertex_word_is_mostly_ones() {
    let dir = TempDir::new().unwrap();
    let t = target(&dir, "v.toml", VERTEX);
    let word = dir.path().join("w.txt");
    let out = boundwalk(&["-n", "2", "-t", s(&t), "--prefix-length", "20000", "--word", s(&word)]);
    assert!(out.status.success());
    let letters: Vec<i32> =
        std::fs::read_to_string(&word).unwrap().split_whitespace().map(|x| x.parse().unwrap()).collect();
    assert_eq!(letters.len(), 20000);
    let ones = letters.iter().filter(|&&l| l == 1).count();
    assert!(ones * 10 > letters.len() * 9, "{ones} ones");
}

#[test]
fn invalid_targets_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = [
        "dimension = 2\nvertices = [[1.0, 0.0], [-0.6, 0.8]]\nedges = [[0, 1]]\n",
        "dimension = 3\nvertices = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]\n",
        "dimension = 2\nvertices = [[1.0, 0.0]]\nbasepoint = 4\n",
        "dimension = 2\nvertices = [[2.0, 0.0]]\n",
        "not toml at all [",
    ];
    for (i, body) in bad.iter().enumerate() {
        let t = target(&dir, &format!("bad{i}.toml"), body);
        let dim = if i == 1 { "3" } else { "2" };
        let out = boundwalk(&["-n", dim, "-t", s(&t), "--phases", "1"]);
        assert_eq!(out.status.code(), Some(2), "case {i}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let t = target(&dir, "e.toml", EDGE);
    let run = |tag: &str| {
        let w = dir.path().join(format!("w{tag}"));
        let tr = dir.path().join(format!("t{tag}"));
        let r = dir.path().join(format!("r{tag}"));
        let out = boundwalk(&[
            "-n", "3", "-t", s(&t), "--phases", "1", "--word", s(&w), "--trace", s(&tr), "--report", s(&r),
        ]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        [w, tr, r].map(|p| std::fs::read(p).unwrap())
    };
    assert_eq!(run("a"), run("b"));
}

#[test]
fn word_replays_to_trace_positions() {
    let dir = TempDir::new().unwrap();
    let t = target(&dir, "e.toml", EDGE);
    let w = dir.path().join("w");
    let tr = dir.path().join("t");
    let out = boundwalk(&["-n", "3", "-t", s(&t), "--prefix-length", "5000", "--word", s(&w), "--trace", s(&tr)]);
    assert!(out.status.success());
    let replay = boundwalk_cli::replay_word_file(&w, 3).unwrap();
    let trace = std::fs::read_to_string(&tr).unwrap();
    let rows: Vec<Vec<i128>> = trace
        .lines()
        .skip(1)
        .map(|l| l.split(',').skip(1).take(3).map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 5001);
    assert_eq!(replay.len(), rows.len());
    for (p, r) in replay.iter().zip(&rows) {
        assert_eq!(p.coords(), r.as_slice());
    }
}

#[test]
fn tolerance_override_fails_verification() {
    let dir = TempDir::new().unwrap();
    let t = target(&dir, "v.toml", VERTEX);
    let out = boundwalk(&["-n", "2", "-t", s(&t), "--phases", "1", "--verify", "--tolerance", "1=0"]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("pass=false"));
}

#[test]
fn dimension_mismatch_is_rejected() {
    let dir = TempDir::new().unwrap();
    let t = target(&dir, "v.toml", VERTEX);
    let out = boundwalk(&["-n", "3", "-t", s(&t), "--phases", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
