//! Recursive construction of a plane spanning tree.
//!
//! For `n >= 5` points the builder sweeps a rotating halving line and takes
//! the first state (intermediate or event line) whose two closed sides both
//! satisfy `s <= size - 3`, builds a tree on each side recursively and joins
//! them. The two sides lie in opposite closed half-planes and share only
//! the one or two points on the line, so the union is crossing-free and
//! contains a spanning tree. Graphs on three or four points are settled by
//! the [`oracle`](crate::oracle).
//!
//! Which of the classical cases a split realises is recorded as a
//! [`CaseTag`] from the status of the starting line.

use std::collections::BTreeSet;
use std::fmt;

use crate::dsu::DisjointSet;
use crate::error::{Error, Result};
use crate::graph::{Edge, GeometricGraph, PlaneTree};
use crate::oracle::{has_plane_spanning_tree, DEFAULT_BUDGET};
use crate::rotation::{full_rotation, line_crosses_triangle, OrientedLine, RotationSequence};
use crate::triangles::{s_count, EmptyTriangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// Three or four points, settled by exhaustive search.
    Base,
    /// The starting line already splits.
    Case1,
    /// Both sides of the starting line are too dense; the split follows
    /// the first line crossing a disconnected empty triangle, whose next
    /// pivot lies on the right.
    Case2_1,
    /// As `Case2_1`, with the next pivot on the left.
    Case2_2,
    /// Only the left side of the starting line is too dense.
    Case3,
    /// Only the right side of the starting line is too dense.
    Case4,
    /// No split was found and the oracle decided.
    Fallback,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Base => "base",
            CaseTag::Case1 => "case1",
            CaseTag::Case2_1 => "case2.1",
            CaseTag::Case2_2 => "case2.2",
            CaseTag::Case3 => "case3",
            CaseTag::Case4 => "case4",
            CaseTag::Fallback => "fallback",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A sweep state whose closed sides both satisfy `s <= size - 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitLine {
    pub line: OrientedLine,
    /// Position in [`RotationSequence::states`].
    pub state_index: usize,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub shared: Vec<usize>,
    pub s_left: usize,
    pub s_right: usize,
    pub case: CaseTag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub depth: usize,
    pub size: usize,
    pub case: CaseTag,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Diagnostics {
    /// The input has more than `n - 3` disconnected empty triangles.
    pub precondition_violated: bool,
    /// No split was found although the bound held. Never expected.
    pub theorem_gap_fallback_used: bool,
    /// A fallback or base-case search ran out of budget.
    pub oracle_budget_exceeded: bool,
}

impl Diagnostics {
    pub fn any(&self) -> bool {
        self.precondition_violated || self.theorem_gap_fallback_used || self.oracle_budget_exceeded
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildReport {
    pub tree: Option<PlaneTree>,
    pub trace: Vec<TraceEntry>,
    pub diagnostics: Diagnostics,
}

impl BuildReport {
    pub fn max_depth(&self) -> usize {
        self.trace.iter().map(|t| t.depth).max().unwrap_or(0)
    }
}

impl fmt::Display for BuildReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.tree {
            Some(t) => {
                let edges: Vec<String> = t.edges().iter().map(|e| format!("[{},{}]", e.lo(), e.hi())).collect();
                writeln!(f, "tree_edges=[{}]", edges.join(","))?;
            }
            None => writeln!(f, "tree_edges=none")?,
        }
        writeln!(f, "trace:")?;
        for t in &self.trace {
            writeln!(f, "  depth={} size={} case={}", t.depth, t.size, t.case)?;
        }
        let d = &self.diagnostics;
        writeln!(
            f,
            "flags: precondition_violated={} theorem_gap_fallback_used={} oracle_budget_exceeded={}",
            d.precondition_violated, d.theorem_gap_fallback_used, d.oracle_budget_exceeded
        )
    }
}

fn side_ok(g: &GeometricGraph, side: &[usize]) -> Result<(bool, usize)> {
    if side.len() < 3 {
        return Ok((false, 0));
    }
    let sub = g.induced_subgraph(side)?;
    let s = s_count(&sub.graph)?.value;
    Ok((s + 3 <= side.len(), s))
}

/// Disconnected empty triangles of `g`, i.e. the witnesses of `s(g)`.
fn disconnected_triangles(g: &GeometricGraph) -> Result<Vec<EmptyTriangle>> {
    Ok(s_count(g)?.witnesses)
}

/// First 0-based line index `j` such that line `j + 1` crosses a
/// disconnected empty triangle of `g`.
pub fn first_crossing_line(g: &GeometricGraph, seq: &RotationSequence) -> Result<Option<usize>> {
    let witnesses = disconnected_triangles(g)?;
    Ok((0..seq.line_count() - 1).find(|&j| {
        witnesses
            .iter()
            .any(|t| line_crosses_triangle(seq.line(j + 1), t.vertices(), g.points()))
    }))
}

/// Side sizes around the shifted event line of the second case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Case2Bookkeeping {
    /// 0-based index of the last line crossing no disconnected triangle.
    pub j: usize,
    /// 0-based index of the event line `L(v_i, v_{i+1})`.
    pub i: usize,
    /// Whether the pivot after `j` lies on the right of line `j`.
    pub next_pivot_right: bool,
    pub line_j_sizes: (usize, usize),
    pub event_sizes: (usize, usize),
}

/// Locates `j` and `i` of the second case on `g`'s rotation, if both exist.
/// With the next pivot on the right, `i` is the first index after `j` whose
/// following pivot lies in the closed left side of line `j` (mirrored
/// otherwise).
pub fn case2_bookkeeping(g: &GeometricGraph, seq: &RotationSequence) -> Result<Option<Case2Bookkeeping>> {
    let Some(j) = first_crossing_line(g, seq)? else { return Ok(None) };
    let lj = seq.line_partition(j);
    let next_pivot_right = lj.in_right(seq.line(j + 1).pivot);
    let i = (j + 1..seq.line_count() - 1).find(|&i| {
        let v = seq.line(i + 1).pivot;
        if next_pivot_right {
            lj.in_left(v)
        } else {
            lj.in_right(v)
        }
    });
    Ok(i.map(|i| {
        let ev = seq.event_partition(i);
        Case2Bookkeeping {
            j,
            i,
            next_pivot_right,
            line_j_sizes: (lj.left.len(), lj.right.len()),
            event_sizes: (ev.left.len(), ev.right.len()),
        }
    }))
}

fn tag_for(g: &GeometricGraph, seq: &RotationSequence, first: (bool, bool), state_index: usize) -> Result<CaseTag> {
    if state_index == 0 {
        return Ok(CaseTag::Case1);
    }
    Ok(match first {
        (false, true) => CaseTag::Case3,
        (true, false) => CaseTag::Case4,
        _ => match first_crossing_line(g, seq)? {
            Some(j) if seq.line_partition(j).in_right(seq.line(j + 1).pivot) => CaseTag::Case2_1,
            Some(_) => CaseTag::Case2_2,
            None => {
                // no crossing line: classify by the chosen state itself
                let prev = seq.partition_of_state(state_index - state_index % 2);
                match seq.states()[state_index].reached() {
                    Some(v) if prev.in_right(v) => CaseTag::Case2_1,
                    _ => CaseTag::Case2_2,
                }
            }
        },
    })
}

/// Scans the full rotation from the halving line and returns the first
/// state whose closed sides both satisfy `s <= size - 3`.
pub fn find_valid_split(g: &GeometricGraph) -> Result<Option<SplitLine>> {
    if g.len() < 5 {
        return Err(Error::TooFewPoints { needed: 5, found: g.len() });
    }
    let seq = full_rotation(g.points())?;
    let mut first = None;
    for (idx, line) in seq.states().iter().enumerate() {
        let part = seq.partition_of_state(idx);
        let (lok, s_left) = side_ok(g, &part.left)?;
        let (rok, s_right) = side_ok(g, &part.right)?;
        if idx == 0 {
            first = Some((lok, rok));
        }
        if lok && rok {
            let case = tag_for(g, &seq, first.unwrap(), idx)?;
            return Ok(Some(SplitLine {
                line: *line,
                state_index: idx,
                left: part.left.clone(),
                right: part.right.clone(),
                shared: part.shared(),
                s_left,
                s_right,
                case,
            }));
        }
    }
    Ok(None)
}

/// Joins trees of the two closed sides of `split` into a plane spanning
/// tree of `g`. Side trees are indexed like `split.left` / `split.right`.
pub fn merge_side_trees(
    g: &GeometricGraph,
    left: &PlaneTree,
    right: &PlaneTree,
    split: &SplitLine,
) -> Result<PlaneTree> {
    if left.vertex_count() != split.left.len() || right.vertex_count() != split.right.len() {
        return Err(Error::Precondition("side trees do not match the split".into()));
    }
    let lift = |map: &[usize], e: &Edge| Edge::new(map[e.lo()], map[e.hi()]);
    let union: BTreeSet<Edge> = left
        .edges()
        .iter()
        .map(|e| lift(&split.left, e))
        .chain(right.edges().iter().map(|e| lift(&split.right, e)))
        .collect();
    // with two shared points the union may close one cycle
    let mut dsu = DisjointSet::new(g.len());
    let tree: Vec<Edge> = union.into_iter().filter(|e| dsu.union(e.lo(), e.hi())).collect();
    g.certify_plane_spanning_tree(tree)
        .map_err(|r| Error::Invariant(format!("merged tree rejected: {r}")))
}

struct Builder {
    budget: u64,
    trace: Vec<TraceEntry>,
    diagnostics: Diagnostics,
}

impl Builder {
    fn oracle(&mut self, g: &GeometricGraph) -> Option<PlaneTree> {
        match has_plane_spanning_tree(g, self.budget) {
            Ok(r) => r.witness,
            Err(_) => {
                self.diagnostics.oracle_budget_exceeded = true;
                None
            }
        }
    }

    fn build(&mut self, g: &GeometricGraph, depth: usize) -> Result<Option<PlaneTree>> {
        let n = g.len();
        if n <= 4 {
            self.trace.push(TraceEntry { depth, size: n, case: CaseTag::Base });
            return Ok(self.oracle(g));
        }
        if let Some(split) = find_valid_split(g)? {
            self.trace.push(TraceEntry { depth, size: n, case: split.case });
            let left = g.induced_subgraph(&split.left)?;
            let right = g.induced_subgraph(&split.right)?;
            let tl = self.build(&left.graph, depth + 1)?;
            let tr = self.build(&right.graph, depth + 1)?;
            if let (Some(tl), Some(tr)) = (tl, tr) {
                return merge_side_trees(g, &tl, &tr, &split).map(Some);
            }
        }
        if s_count(g)?.value + 3 <= n {
            self.diagnostics.theorem_gap_fallback_used = true;
        } else {
            self.diagnostics.precondition_violated = true;
        }
        self.trace.push(TraceEntry { depth, size: n, case: CaseTag::Fallback });
        Ok(self.oracle(g))
    }
}

/// Builds a plane spanning tree of `g` with the default oracle budget.
pub fn build_plane_tree(g: &GeometricGraph) -> Result<BuildReport> {
    build_plane_tree_with_budget(g, DEFAULT_BUDGET)
}

pub fn build_plane_tree_with_budget(g: &GeometricGraph, budget: u64) -> Result<BuildReport> {
    let n = g.len();
    if n < 3 {
        return Err(Error::TooFewPoints { needed: 3, found: n });
    }
    g.points().require_general_position()?;
    let mut b = Builder { budget, trace: Vec::new(), diagnostics: Diagnostics::default() };
    if s_count(g)?.value + 3 > n {
        b.diagnostics.precondition_violated = true;
    }
    let tree = b.build(g, 0)?;
    if let Some(t) = &tree {
        // re-certify against the caller's graph
        g.certify_plane_spanning_tree(t.edges().iter().copied())
            .map_err(|r| Error::Invariant(format!("built tree rejected: {r}")))?;
    }
    Ok(BuildReport { tree, trace: b.trace, diagnostics: b.diagnostics })
}
