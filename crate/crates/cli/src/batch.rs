//! Random campaigns over budgeted instances. Trials are split across worker
//! threads and reported in trial order, so output depends only on the
//! configuration.

use std::collections::BTreeMap;
use std::thread;

use planetree::builder::{build_plane_tree, CaseTag};
use planetree::generators::{random_instance, RandomMode};
use planetree::oracle::{has_plane_spanning_tree, DEFAULT_BUDGET};
use planetree::rotation::full_rotation;
use planetree::{Edge, GeometricGraph};

use crate::commands::{CmdResult, EXIT_OK};

pub const EXIT_BATCH_FAILURES: u8 = 5;

pub struct Config {
    pub trials: u64,
    pub min_n: usize,
    pub max_n: usize,
    pub seed: u64,
    pub oracle_max_n: usize,
    pub jobs: usize,
}

#[derive(Default)]
struct Outcome {
    n: usize,
    seed: u64,
    s: usize,
    tree: bool,
    oracle: Option<bool>,
    rotation_checked: bool,
    precondition_violated: bool,
    theorem_gap: bool,
    budget_exceeded: bool,
    cases: Vec<CaseTag>,
    failure: Option<String>,
}

fn independent_check(g: &GeometricGraph, edges: &[(usize, usize)]) -> Result<(), String> {
    let n = g.len();
    if edges.len() + 1 != n {
        return Err(format!("tree has {} edges for {n} points", edges.len()));
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &[usize], mut v: usize) -> usize {
        while p[v] != v {
            v = p[v];
        }
        v
    }
    for &(a, b) in edges {
        if !g.has_edge(a, b) {
            return Err(format!("tree edge [{a},{b}] not in graph"));
        }
        let (ra, rb) = (root(&parent, a), root(&parent, b));
        if ra == rb {
            return Err(format!("tree edge [{a},{b}] closes a cycle"));
        }
        parent[ra] = rb;
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if g.crosses(Edge::new(a, b), Edge::new(c, d)) {
                return Err(format!("tree edges [{a},{b}] and [{c},{d}] cross"));
            }
        }
    }
    Ok(())
}

fn run_trial(cfg: &Config, trial: u64) -> Outcome {
    let span = (cfg.max_n - cfg.min_n + 1) as u64;
    let n = cfg.min_n + (trial % span) as usize;
    let seed = cfg.seed.wrapping_add(trial);
    let mut out = Outcome { n, seed, ..Default::default() };
    let inst = match random_instance(n, seed, RandomMode::Budgeted) {
        Ok(i) => i,
        Err(e) => {
            out.failure = Some(format!("generation: {e}"));
            return out;
        }
    };
    let g = &inst.graph;
    out.s = inst.s;

    let report = match build_plane_tree(g) {
        Ok(r) => r,
        Err(e) => {
            out.failure = Some(format!("builder error: {e}"));
            return out;
        }
    };
    let d = report.diagnostics;
    out.precondition_violated = d.precondition_violated;
    out.theorem_gap = d.theorem_gap_fallback_used;
    out.budget_exceeded = d.oracle_budget_exceeded;
    out.cases = report.trace.iter().map(|t| t.case).collect();
    out.tree = report.tree.is_some();
    if let Some(t) = &report.tree {
        let edges: Vec<(usize, usize)> = t.edges().iter().map(|e| e.ends()).collect();
        if let Err(e) = independent_check(g, &edges) {
            out.failure = Some(format!("unsound tree: {e}"));
            return out;
        }
    }
    if d.theorem_gap_fallback_used {
        out.failure = Some("theorem gap fallback used".into());
        return out;
    }
    if !d.precondition_violated && report.tree.is_none() {
        out.failure = Some("no tree despite s <= n - 3".into());
        return out;
    }

    if n <= cfg.oracle_max_n {
        match has_plane_spanning_tree(g, DEFAULT_BUDGET) {
            Ok(r) => {
                out.oracle = Some(r.exists);
                if r.exists != out.tree {
                    out.failure = Some(format!("oracle says {}, builder says {}", r.exists, out.tree));
                    return out;
                }
            }
            Err(e) => {
                out.failure = Some(format!("oracle: {e}"));
                return out;
            }
        }
    }

    if n >= 3 {
        match full_rotation(g.points()) {
            Ok(_) => out.rotation_checked = true,
            Err(e) => {
                out.failure = Some(format!("rotation: {e}"));
                return out;
            }
        }
    }
    out
}

fn run_all(cfg: &Config) -> Vec<Outcome> {
    let jobs = match cfg.jobs {
        0 => thread::available_parallelism().map_or(1, |n| n.get()),
        j => j,
    }
    .min(cfg.trials.max(1) as usize);
    let mut results: Vec<(u64, Outcome)> = thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs as u64)
            .map(|w| {
                scope.spawn(move || {
                    (w..cfg.trials).step_by(jobs).map(|t| (t, run_trial(cfg, t))).collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    results.sort_by_key(|(t, _)| *t);
    results.into_iter().map(|(_, o)| o).collect()
}

pub fn run(cfg: &Config) -> CmdResult {
    let outcomes = run_all(cfg);
    println!("trials={} n={}..{} seed={}", cfg.trials, cfg.min_n, cfg.max_n, cfg.seed);

    let mut per_n: BTreeMap<usize, [usize; 4]> = BTreeMap::new();
    let mut cases: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut failures = Vec::new();
    let (mut pre, mut gap, mut budget, mut oracle, mut rotation) = (0, 0, 0, 0, 0);
    for (trial, o) in outcomes.iter().enumerate() {
        let row = per_n.entry(o.n).or_default();
        row[0] += 1;
        row[1] += usize::from(o.tree);
        row[2] += usize::from(o.oracle.is_some());
        row[3] += usize::from(o.failure.is_some());
        pre += usize::from(o.precondition_violated);
        gap += usize::from(o.theorem_gap);
        budget += usize::from(o.budget_exceeded);
        oracle += usize::from(o.oracle.is_some());
        rotation += usize::from(o.rotation_checked);
        for c in &o.cases {
            *cases.entry(c.as_str()).or_default() += 1;
        }
        if let Some(f) = &o.failure {
            failures.push(format!("failure trial={trial} n={} seed={} s={}: {f}", o.n, o.seed, o.s));
        }
    }

    println!("{:>4} {:>7} {:>6} {:>7} {:>8}", "n", "trials", "trees", "oracle", "failures");
    for (n, [t, tr, or, f]) in &per_n {
        println!("{n:>4} {t:>7} {tr:>6} {or:>7} {f:>8}");
    }
    let case_list: Vec<String> = cases.iter().map(|(k, v)| format!("{k}={v}")).collect();
    if case_list.is_empty() {
        println!("cases: none");
    } else {
        println!("cases: {}", case_list.join(" "));
    }
    println!("flags: precondition_violated={pre} theorem_gap_fallback_used={gap} oracle_budget_exceeded={budget}");
    println!("oracle_checked={oracle} rotation_checked={rotation}");
    for f in &failures {
        println!("{f}");
    }
    println!("failures={}", failures.len());
    Ok(if failures.is_empty() { EXIT_OK } else { EXIT_BATCH_FAILURES })
}
