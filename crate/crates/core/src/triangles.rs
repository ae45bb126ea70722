//! Empty triangles of a point set and the count of those that are
//! disconnected in a geometric graph.

use crate::error::{Error, Result};
use crate::geom::{PointSet, TriangleLocation};
use crate::graph::GeometricGraph;

/// Index triple `u < v < w` whose triangle has no point of the host set in
/// its interior.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EmptyTriangle([usize; 3]);

impl EmptyTriangle {
    pub fn vertices(&self) -> [usize; 3] {
        self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }
}

/// Number of disconnected empty triangles of a graph, with the witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SCount {
    pub value: usize,
    pub witnesses: Vec<EmptyTriangle>,
}

fn is_empty_triangle(ps: &PointSet, u: usize, v: usize, w: usize) -> bool {
    let (a, b, c) = (ps.point(u), ps.point(v), ps.point(w));
    (0..ps.len()).filter(|&p| p != u && p != v && p != w).all(|p| {
        // a, b, c are non-collinear under general position
        crate::geom::point_in_triangle(ps.point(p), a, b, c)
            .map(|loc| loc != TriangleLocation::Interior)
            .unwrap_or(true)
    })
}

/// All empty triangles in lexicographic order, by the all-triples scan.
pub fn enumerate_empty_triangles(ps: &PointSet) -> Result<Vec<EmptyTriangle>> {
    if ps.len() < 3 {
        return Err(Error::TooFewPoints { needed: 3, found: ps.len() });
    }
    ps.require_general_position()?;
    Ok(empty_triangles_unchecked(ps))
}

pub(crate) fn empty_triangles_unchecked(ps: &PointSet) -> Vec<EmptyTriangle> {
    let n = ps.len();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                if is_empty_triangle(ps, u, v, w) {
                    out.push(EmptyTriangle([u, v, w]));
                }
            }
        }
    }
    out
}

/// Disconnected members of an already enumerated triangle list of `g`'s
/// point set.
pub fn count_disconnected(g: &GeometricGraph, triangles: &[EmptyTriangle]) -> SCount {
    let witnesses: Vec<EmptyTriangle> = triangles
        .iter()
        .copied()
        .filter(|t| {
            let [u, v, w] = t.0;
            !g.triple_connected_unchecked(u, v, w)
        })
        .collect();
    SCount { value: witnesses.len(), witnesses }
}

/// `s(G)`: empty triangles of `g`'s own point set whose vertices induce a
/// disconnected subgraph.
pub fn s_count(g: &GeometricGraph) -> Result<SCount> {
    let triangles = enumerate_empty_triangles(g.points())?;
    Ok(count_disconnected(g, &triangles))
}

/// Whether every triple of `subset` that is empty relative to the subset is
/// also empty relative to `parent`. Holds whenever `subset` is the
/// intersection of `parent` with a closed half-plane.
pub fn relative_equals_global_empty(parent: &PointSet, subset: &[usize]) -> Result<bool> {
    parent.require_general_position()?;
    let sub = parent.subset(subset)?;
    if sub.len() < 3 {
        return Ok(true);
    }
    Ok(empty_triangles_unchecked(&sub).iter().all(|t| {
        let [a, b, c] = t.0;
        is_empty_triangle(parent, subset[a], subset[b], subset[c])
    }))
}
