use std::error::Error as StdError;
use std::path::{Path, PathBuf};

use planetree::builder::build_plane_tree_with_budget;
use planetree::generators::{self, RandomMode};
use planetree::oracle::has_plane_spanning_tree;
use planetree::rotation::{full_rotation, halving_left_size};
use planetree::triangles::{count_disconnected, enumerate_empty_triangles};
use planetree::{Edge, PlaneTree};

use crate::instance::{self, parse_edge_list};
use crate::{svg, GenFamily};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_NEGATIVE: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;

pub type CmdResult = Result<u8, Box<dyn StdError>>;

fn edge_list(edges: impl IntoIterator<Item = Edge>) -> String {
    let parts: Vec<String> = edges.into_iter().map(|e| format!("[{},{}]", e.lo(), e.hi())).collect();
    format!("[{}]", parts.join(","))
}

fn family_name(f: GenFamily) -> &'static str {
    match f {
        GenFamily::Complete => "complete",
        GenFamily::PathComplement => "path-complement",
        GenFamily::RConstruction => "r-construction",
        GenFamily::Random => "random",
    }
}

pub fn gen(family: GenFamily, n: usize, out: Option<PathBuf>, seed: u64, scale: u32, path: bool) -> CmdResult {
    let scale = i64::from(scale);
    let inst = match family {
        GenFamily::Complete => generators::random_instance(n, seed, RandomMode::Complete)?,
        GenFamily::Random => generators::random_instance(n, seed, RandomMode::Budgeted)?,
        GenFamily::PathComplement => generators::path_complement(n, scale)?,
        GenFamily::RConstruction => {
            let (r, rc) = generators::r_construction(n, scale)?;
            if path {
                r
            } else {
                rc
            }
        }
    };
    let out = out.unwrap_or_else(|| PathBuf::from(format!("{}-{n}.json", family_name(family))));
    instance::save(&out, &inst.graph).map_err(|e| format!("{}: {e}", out.display()))?;
    println!("s={}", inst.s);
    println!("n={} edges={} out={}", n, inst.graph.edge_count(), out.display());
    Ok(EXIT_OK)
}

pub fn stats(input: &Path) -> CmdResult {
    let g = instance::load(input, true)?;
    let triangles = enumerate_empty_triangles(g.points())?;
    let s = count_disconnected(&g, &triangles);
    println!("n={}", g.len());
    println!("edges={}", g.edge_count());
    println!("empty_triangles={} s={}", triangles.len(), s.value);
    for t in &s.witnesses {
        let [a, b, c] = t.vertices();
        println!("witness [{a},{b},{c}]");
    }
    Ok(EXIT_OK)
}

pub fn build(input: &Path, svg_out: Option<&Path>, budget: u64) -> CmdResult {
    let g = instance::load(input, true)?;
    let report = build_plane_tree_with_budget(&g, budget)?;
    print!("{report}");
    if let Some(p) = svg_out {
        let tree: Option<Vec<(usize, usize)>> = report.tree.as_ref().map(|t| t.edges().iter().map(|e| e.ends()).collect());
        std::fs::write(p, svg::render(&g, tree.as_deref())).map_err(|e| format!("{}: {e}", p.display()))?;
    }
    Ok(if report.tree.is_some() { EXIT_OK } else { EXIT_NEGATIVE })
}

pub fn check(input: &Path, tree: &str) -> CmdResult {
    let g = instance::load(input, true)?;
    let edges = parse_edge_list(tree)?;
    match g.certify_plane_spanning_tree(edges) {
        Ok(t) => {
            println!("accepted {}", edge_list(t.into_edges()));
            Ok(EXIT_OK)
        }
        Err(r) => {
            println!("rejected {r}");
            println!("reason={}", r.kind());
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn print_witness(t: &PlaneTree) {
    println!("witness={}", edge_list(t.edges().iter().copied()));
}

pub fn oracle(input: &Path, budget: u64) -> CmdResult {
    let g = instance::load(input, true)?;
    match has_plane_spanning_tree(&g, budget) {
        Ok(r) => {
            println!("exists={} nodes={}", r.exists, r.nodes);
            if let Some(t) = &r.witness {
                print_witness(t);
            }
            Ok(if r.exists { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Err(e) => {
            println!("budget-exceeded: {e}");
            Ok(EXIT_BUDGET)
        }
    }
}

pub fn rotate(input: &Path) -> CmdResult {
    let g = instance::load(input, false)?;
    let seq = full_rotation(g.points())?;
    print!("{}", seq.dump());
    let n = g.len();
    let pivots = seq.pivots();
    println!("invariants:");
    println!("  lines={} events={} opposite=L{}", seq.line_count(), seq.line_count() - 1, seq.opposite_index() + 1);
    println!("  constant |L-|={} ok", halving_left_size(n));
    println!("  pivot closure v_s=v_1={} ok", pivots[0]);
    Ok(EXIT_OK)
}
