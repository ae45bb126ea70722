//! Exhaustive decision procedure for the existence of a plane spanning tree.
//!
//! Include/exclude backtracking over the edges in lexicographic order. A
//! branch is cut when the chosen edges plus the still-usable later edges
//! (those crossing no chosen edge) can no longer connect the graph.

use std::fmt;

use crate::dsu::DisjointSet;
use crate::graph::{Edge, GeometricGraph, PlaneTree};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub exists: bool,
    /// Certified witness when `exists`.
    pub witness: Option<PlaneTree>,
    /// Search nodes visited.
    pub nodes: u64,
}

/// The search visited more nodes than allowed; nothing is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BudgetExceeded {
    pub budget: u64,
}

impl fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "search budget of {} nodes exceeded", self.budget)
    }
}

impl std::error::Error for BudgetExceeded {}

struct Search<'a> {
    n: usize,
    edges: Vec<Edge>,
    crossing: Vec<Vec<usize>>,
    blocked: Vec<u32>,
    chosen: Vec<usize>,
    dsu: DisjointSet,
    nodes: u64,
    budget: u64,
    graph: &'a GeometricGraph,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Search<'_> {
    fn can_still_connect(&self, from: usize) -> bool {
        let mut reach = self.dsu.clone();
        for (idx, e) in self.edges.iter().enumerate().skip(from) {
            if reach.components() == 1 {
                break;
            }
            if self.blocked[idx] == 0 {
                reach.union(e.lo(), e.hi());
            }
        }
        reach.components() == 1
    }

    fn run(&mut self, idx: usize) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        if self.chosen.len() + 1 >= self.n {
            return Step::Found;
        }
        if idx == self.edges.len() || !self.can_still_connect(idx) {
            return Step::Exhausted;
        }
        let e = self.edges[idx];
        if self.blocked[idx] == 0 && self.dsu.find(e.lo()) != self.dsu.find(e.hi()) {
            self.dsu.union(e.lo(), e.hi());
            self.chosen.push(idx);
            for &f in &self.crossing[idx] {
                self.blocked[f] += 1;
            }
            match self.run(idx + 1) {
                Step::Exhausted => {}
                other => return other,
            }
            for &f in &self.crossing[idx] {
                self.blocked[f] -= 1;
            }
            self.chosen.pop();
            self.dsu.undo();
        }
        self.run(idx + 1)
    }
}

/// Decides whether `g` has a plane spanning tree, visiting at most `budget`
/// search nodes. The first tree found in lexicographic edge order is the
/// witness.
pub fn has_plane_spanning_tree(g: &GeometricGraph, budget: u64) -> Result<OracleResult, BudgetExceeded> {
    let edges: Vec<Edge> = g.edges().iter().copied().collect();
    let m = edges.len();
    // only later edges matter: earlier ones are already decided
    let crossing: Vec<Vec<usize>> = (0..m)
        .map(|i| (i + 1..m).filter(|&j| g.crosses(edges[i], edges[j])).collect())
        .collect();
    let mut search = Search {
        n: g.len(),
        edges,
        crossing,
        blocked: vec![0; m],
        chosen: Vec::new(),
        dsu: DisjointSet::new(g.len()),
        nodes: 0,
        budget,
        graph: g,
    };
    match search.run(0) {
        Step::OutOfBudget => Err(BudgetExceeded { budget }),
        Step::Exhausted => Ok(OracleResult { exists: false, witness: None, nodes: search.nodes }),
        Step::Found => {
            let tree = search.chosen.iter().map(|&i| search.edges[i]);
            let witness = search
                .graph
                .certify_plane_spanning_tree(tree)
                .unwrap_or_else(|r| panic!("oracle produced an invalid tree: {r}"));
            Ok(OracleResult { exists: true, witness: Some(witness), nodes: search.nodes })
        }
    }
}
