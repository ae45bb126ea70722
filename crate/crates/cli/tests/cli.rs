use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use planetree::{GeometricGraph, PointSet};
use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planetree"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn gen(dir: &TempDir, args: &[&str], file: &str) -> PathBuf {
    let path = dir.path().join(file);
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.push(path.to_str().unwrap());
    let o = run(dir.path(), &full);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_path_complement_default_output() {
    let dir = TempDir::new().unwrap();
    let o = run(dir.path(), &["gen", "path-complement", "5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("s=3\n"));
    assert!(dir.path().join("path-complement-5.json").exists());
}

#[test]
fn gen_certificates() {
    let dir = TempDir::new().unwrap();
    let o = run(dir.path(), &["gen", "complete", "8", "--seed", "42", "c.json"]);
    assert!(stdout(&o).starts_with("s=0\n"));
    let o = run(dir.path(), &["gen", "r-construction", "7", "r.json"]);
    assert!(stdout(&o).starts_with("s=4\n"));
    let o = run(dir.path(), &["gen", "r-construction", "7", "--path", "p.json"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("edges=6"));
    let o = run(dir.path(), &["gen", "random", "12", "--seed", "3", "x.json"]);
    let s: usize = stdout(&o).lines().next().unwrap().strip_prefix("s=").unwrap().parse().unwrap();
    assert!(s <= 9);
}

#[test]
fn gen_errors() {
    let dir = TempDir::new().unwrap();
    assert_eq!(code(&run(dir.path(), &["gen", "r-construction", "4", "x.json"])), 1);
    assert_eq!(code(&run(dir.path(), &["gen", "bogus", "5"])), 2);
    assert_eq!(code(&run(dir.path(), &["gen", "complete", "five"])), 2);
}

#[test]
fn round_trip_is_byte_exact() {
    let dir = TempDir::new().unwrap();
    for (args, file) in [
        (&["random", "11", "--seed", "5"][..], "a.json"),
        (&["r-construction", "9"][..], "b.json"),
        (&["path-complement", "7", "--scale", "500"][..], "c.json"),
    ] {
        let p = gen(&dir, args, file);
        let first = std::fs::read_to_string(&p).unwrap();
        assert_eq!(reserialize(&load_graph(&first)), first);
    }
}

#[derive(serde::Deserialize)]
struct Raw {
    edges: Vec<(usize, usize)>,
    points: Vec<(i64, i64)>,
}

fn load_graph(text: &str) -> GeometricGraph {
    let raw: Raw = serde_json::from_str(text).unwrap();
    let ps = PointSet::from_coords(&raw.points).unwrap();
    assert!(ps.in_general_position());
    GeometricGraph::new(ps, raw.edges).unwrap()
}

fn reserialize(g: &GeometricGraph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|e| format!("[{},{}]", e.lo(), e.hi())).collect();
    let points: Vec<String> = g.points().points().iter().map(|p| format!("[{},{}]", p.x, p.y)).collect();
    format!("{{\"edges\":[{}],\"points\":[{}]}}\n", edges.join(","), points.join(","))
}

#[test]
fn stats_block() {
    let dir = TempDir::new().unwrap();
    let p = gen(&dir, &["path-complement", "5"], "t5.json");
    let o = run(dir.path(), &["stats", arg(&p)]);
    let out = stdout(&o);
    assert!(out.contains("empty_triangles=10 s=3"), "{out}");
    assert_eq!(out.matches("witness ").count(), 3);

    std::fs::write(
        dir.path().join("k5.json"),
        r#"{"points": [[10,0],[3,9],[-8,6],[-8,-6],[3,-9]], "edges": [[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#,
    )
    .unwrap();
    let out = stdout(&run(dir.path(), &["stats", "k5.json"]));
    assert!(out.contains("empty_triangles=10 s=0"), "{out}");
}

#[test]
fn malformed_input_reports_position() {
    let dir = TempDir::new().unwrap();
    std::fs::write(dir.path().join("bad.json"), "{\"points\": [[0, 0],\n  [1, oops]]}").unwrap();
    let o = run(dir.path(), &["stats", "bad.json"]);
    assert_eq!(code(&o), 1);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2"), "{err}");

    std::fs::write(dir.path().join("float.json"), r#"{"points": [[0, 0.5], [1, 3], [4, 1]], "edges": []}"#).unwrap();
    assert_eq!(code(&run(dir.path(), &["stats", "float.json"])), 1);

    std::fs::write(dir.path().join("coll.json"), r#"{"points": [[0, 0], [1, 1], [2, 2]], "edges": []}"#).unwrap();
    let o = run(dir.path(), &["build", "coll.json"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("general position"));

    assert_eq!(code(&run(dir.path(), &["stats", "missing.json"])), 1);
}

#[test]
fn build_outcomes() {
    let dir = TempDir::new().unwrap();
    let r7 = gen(&dir, &["r-construction", "7"], "r7.json");
    let o = run(dir.path(), &["build", arg(&r7), "--svg", "r7.svg"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let tree_line = out.lines().next().unwrap();
    assert_eq!(tree_line.matches('[').count(), 7, "{tree_line}");
    let svg = std::fs::read_to_string(dir.path().join("r7.svg")).unwrap();
    assert!(svg.contains("<svg") && svg.contains("viewBox"));

    let t6 = gen(&dir, &["path-complement", "6"], "t6.json");
    let o = run(dir.path(), &["build", arg(&t6)]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("precondition_violated=true"));

    let k = gen(&dir, &["complete", "12", "--seed", "1"], "k.json");
    let o = run(dir.path(), &["build", arg(&k)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains(
        "precondition_violated=false theorem_gap_fallback_used=false oracle_budget_exceeded=false"
    ));
}

#[test]
fn check_verdicts() {
    let dir = TempDir::new().unwrap();
    std::fs::write(
        dir.path().join("sq.json"),
        r#"{"points": [[0,0],[4,0],[4,4],[0,4],[1,2]], "edges": [[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#,
    )
    .unwrap();
    let o = run(dir.path(), &["check", "sq.json", "[[4,0],[4,1],[4,2],[4,3]]"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));

    let o = run(dir.path(), &["check", "sq.json", "[[0,2],[1,3],[0,4],[1,4]]"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("crossing: [0, 2] crosses [1, 3]"), "{}", stdout(&o));

    std::fs::write(dir.path().join("short.json"), "[[0,1],[1,2],[2,3]]").unwrap();
    let o = run(dir.path(), &["check", "sq.json", "short.json"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("reason=wrong-count"));

    assert_eq!(code(&run(dir.path(), &["check", "sq.json", "[[0,1"])), 1);
}

#[test]
fn oracle_outcomes() {
    let dir = TempDir::new().unwrap();
    let t6 = gen(&dir, &["path-complement", "6"], "t6.json");
    assert_eq!(code(&run(dir.path(), &["oracle", arg(&t6)])), 3);

    let k = gen(&dir, &["complete", "10", "--seed", "9"], "k.json");
    let o = run(dir.path(), &["oracle", arg(&k)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("witness=[["));

    let big = gen(&dir, &["complete", "25", "--seed", "2"], "big.json");
    let o = run(dir.path(), &["oracle", arg(&big), "--budget", "3"]);
    assert_eq!(code(&o), 4);
    assert!(stdout(&o).contains("budget-exceeded"));
}

#[test]
fn rotate_dump() {
    let dir = TempDir::new().unwrap();
    std::fs::write(dir.path().join("p.json"), r#"{"points": [[0,0],[5,1],[1,4],[3,9],[-2,6]]}"#).unwrap();
    let o = run(dir.path(), &["rotate", "p.json"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let states: Vec<&str> = out.lines().filter(|l| l.starts_with('L') || l.starts_with('E')).collect();
    for l in states.iter().filter(|l| l.starts_with('L')) {
        assert!(l.contains("|L-|=3"), "{l}");
    }
    let pivot = |l: &str| l.split_whitespace().nth(1).unwrap().to_string();
    assert_eq!(pivot(states[0]), pivot(states[states.len() - 1]));
    assert!(out.contains("pivot closure"));
}

#[test]
fn batch_summaries() {
    let dir = TempDir::new().unwrap();
    let o = run(dir.path(), &["batch", "--trials", "0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("failures=0\n"));

    let a = run(dir.path(), &["batch", "--trials", "60", "--min-n", "3", "--max-n", "9", "--seed", "11", "--jobs", "4"]);
    let b = run(dir.path(), &["batch", "--trials", "60", "--min-n", "3", "--max-n", "9", "--seed", "11", "--jobs", "1"]);
    assert_eq!(code(&a), 0, "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("oracle_checked=60"));
    assert!(stdout(&a).contains("base="));

    assert_eq!(code(&run(dir.path(), &["batch", "--min-n", "9", "--max-n", "5"])), 2);
}
