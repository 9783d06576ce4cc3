use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const HOUSE: &str = "a b\nb c\nb p\np q\nq b\n";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_basilica"))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str], path: Option<&Path>) -> Output {
    let mut cmd = bin();
    if let Some(p) = path {
        cmd.arg(p);
    }
    cmd.args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn json_on_stdout() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "house.txt", HOUSE);
    let out = run(&["--out", "json"], Some(&g));
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["deficiency"], 1);
    assert_eq!(v["order"]["hasse_edges"], serde_json::json!([[0, 1]]));
}

#[test]
fn runs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "house.txt", HOUSE);
    for fmt in ["json", "dot"] {
        let first = run(&["--out", fmt], Some(&g));
        let second = run(&["--out", fmt], Some(&g));
        assert_eq!(first.stdout, second.stdout);
        assert!(!first.stdout.is_empty());
    }
}

#[test]
fn dot_output_file() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "house.txt", HOUSE);
    let target = dir.path().join("house.dot");
    let out = run(
        &["--out", "dot", "--output", target.to_str().unwrap()],
        Some(&g),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let dot = fs::read_to_string(&target).unwrap();
    assert!(dot.starts_with("digraph basilica {"));
    assert_eq!(dot.matches("->").count(), 1);
    assert!(dot.contains("label=\"{b}\""));
}

#[test]
fn dimacs_by_extension_and_flag() {
    let dir = TempDir::new().unwrap();
    let text = "c k2\np edge 2 1\ne 1 2\n";
    let by_ext = run(&[], Some(&write(&dir, "k2.col", text)));
    assert_eq!(by_ext.status.code(), Some(0));
    let forced = run(&["--format", "dimacs"], Some(&write(&dir, "k2.txt", text)));
    assert_eq!(forced.status.code(), Some(0));
    assert_eq!(by_ext.stdout, forced.stdout);
    assert!(stdout(&forced).contains("\"1\""));
    // Read as an edge list the same text is malformed.
    let wrong = run(
        &["--format", "edgelist"],
        Some(&write(&dir, "k2.dimacs", text)),
    );
    assert_eq!(wrong.status.code(), Some(1));
}

#[test]
fn verify_small_graph() {
    let dir = TempDir::new().unwrap();
    // 8 vertices: a 4-cycle with a triangle-and-stick above it.
    let g = write(
        &dir,
        "g8.txt",
        "1 2\n2 3\n3 4\n4 1\n1 5\n5 6\n1 6\n6 7\n7 8\n",
    );
    let out = run(&["--verify"], Some(&g));
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn verify_refused_on_large_graph() {
    let dir = TempDir::new().unwrap();
    let text: String = (1..100).map(|i| format!("{i} {}\n", i + 1)).collect();
    let g = write(&dir, "huge.txt", &text);
    let out = run(&["--verify"], Some(&g));
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    // Without --verify the same graph is fine.
    assert_eq!(run(&[], Some(&g)).status.code(), Some(0));
}

#[test]
fn parse_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let out = run(&[], Some(&write(&dir, "loop.txt", "a b\na a\n")));
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let missing = run(&[], Some(&dir.path().join("absent.txt")));
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn reads_stdin() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = bin()
        .args(["-", "--out", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(HOUSE.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"gallai_edmonds\""));
}
