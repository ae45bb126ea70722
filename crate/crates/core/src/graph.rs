//! Geometric graphs: a [`PointSet`] plus straight-line edges between its
//! points, induced subgraphs, crossing tests and plane spanning tree
//! certification.

use std::collections::BTreeSet;
use std::fmt;

use crate::dsu::DisjointSet;
use crate::error::{Error, Result};
use crate::geom::{segments_properly_cross, PointSet};

/// An undirected edge stored canonically as `(min, max)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(usize, usize);

impl Edge {
    /// Canonical edge between `a` and `b`. Panics on a self-loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "self-loop at {a}");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn try_new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            Err(Error::SelfLoop(a))
        } else {
            Ok(Edge::new(a, b))
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn ends(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn touches(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.touches(other.0) || self.touches(other.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.0, self.1)
    }
}

/// A graph drawn on a point set with straight-line edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricGraph {
    ps: PointSet,
    edges: BTreeSet<Edge>,
}

impl GeometricGraph {
    /// Builds a graph, rejecting out-of-range indices, self-loops and
    /// duplicate edges.
    pub fn new(ps: PointSet, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = ps.len();
        let mut edges = BTreeSet::new();
        for (a, b) in pairs {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::IndexOutOfRange { index: v, len: n });
                }
            }
            let e = Edge::try_new(a, b)?;
            if !edges.insert(e) {
                return Err(Error::DuplicateEdge(e.lo(), e.hi()));
            }
        }
        Ok(Self { ps, edges })
    }

    pub fn from_edges(ps: PointSet, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        Self::new(ps, edges.into_iter().map(Edge::ends))
    }

    pub fn complete(ps: PointSet) -> Self {
        let n = ps.len();
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| Edge(i, j)))
            .collect();
        Self { ps, edges }
    }

    pub fn edgeless(ps: PointSet) -> Self {
        Self { ps, edges: BTreeSet::new() }
    }

    /// The complement on the same point set.
    pub fn complement(&self) -> Self {
        let n = self.ps.len();
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| Edge(i, j)))
            .filter(|e| !self.edges.contains(e))
            .collect();
        Self { ps: self.ps.clone(), edges }
    }

    pub fn points(&self) -> &PointSet {
        &self.ps
    }

    pub fn len(&self) -> usize {
        self.ps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ps.is_empty()
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.edges.contains(&Edge::new(a, b))
    }

    /// Removes an edge; returns whether it was present.
    pub fn remove_edge(&mut self, e: Edge) -> bool {
        self.edges.remove(&e)
    }

    pub fn insert_edge(&mut self, e: Edge) -> Result<bool> {
        let n = self.len();
        if e.hi() >= n {
            return Err(Error::IndexOutOfRange { index: e.hi(), len: n });
        }
        Ok(self.edges.insert(e))
    }

    /// Edges of the induced subgraph on `subset`, with a map back to the
    /// parent's indices. Subset order defines the child's indexing.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Subgraph> {
        if subset.is_empty() {
            return Err(Error::TooFewPoints { needed: 1, found: 0 });
        }
        let n = self.len();
        let mut local = vec![usize::MAX; n];
        for (i, &v) in subset.iter().enumerate() {
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, len: n });
            }
            if local[v] != usize::MAX {
                return Err(Error::NonDistinct);
            }
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| local[e.lo()] != usize::MAX && local[e.hi()] != usize::MAX)
            .map(|e| Edge::new(local[e.lo()], local[e.hi()]))
            .collect();
        Ok(Subgraph {
            graph: GeometricGraph { ps: self.ps.subset(subset)?, edges },
            parent_index: subset.to_vec(),
        })
    }

    /// True iff at least two of the three pairs among `u, v, w` are edges,
    /// i.e. the induced 3-vertex subgraph is connected.
    pub fn triple_connected(&self, u: usize, v: usize, w: usize) -> Result<bool> {
        if u == v || v == w || u == w {
            return Err(Error::NonDistinct);
        }
        let n = self.len();
        if let Some(&bad) = [u, v, w].iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, len: n });
        }
        Ok(self.triple_connected_unchecked(u, v, w))
    }

    pub(crate) fn triple_connected_unchecked(&self, u: usize, v: usize, w: usize) -> bool {
        let count = [self.has_edge(u, v), self.has_edge(v, w), self.has_edge(u, w)]
            .iter()
            .filter(|&&b| b)
            .count();
        count >= 2
    }

    pub fn crosses(&self, e: Edge, f: Edge) -> bool {
        if e.shares_endpoint(f) {
            return false;
        }
        let p = |i| self.ps.point(i);
        segments_properly_cross(p(e.lo()), p(e.hi()), p(f.lo()), p(f.hi()))
    }

    /// First properly crossing pair in `edges`, by all-pairs scan.
    pub fn find_crossing<'a>(&self, edges: impl IntoIterator<Item = &'a Edge>) -> Option<(Edge, Edge)> {
        let list: Vec<Edge> = edges.into_iter().copied().collect();
        for (i, &e) in list.iter().enumerate() {
            for &f in &list[i + 1..] {
                if self.crosses(e, f) {
                    return Some((e, f));
                }
            }
        }
        None
    }

    pub fn is_crossing_free<'a>(&self, edges: impl IntoIterator<Item = &'a Edge>) -> bool {
        self.find_crossing(edges).is_none()
    }

    /// Verifies that `tree` is a plane spanning tree of this graph.
    pub fn certify_plane_spanning_tree(
        &self,
        tree: impl IntoIterator<Item = Edge>,
    ) -> std::result::Result<PlaneTree, Rejection> {
        let n = self.len();
        let edges: BTreeSet<Edge> = tree.into_iter().collect();
        if let Some(&e) = edges.iter().find(|e| !self.edges.contains(e)) {
            return Err(Rejection::NotSubgraph(e));
        }
        if edges.len() + 1 != n {
            return Err(Rejection::WrongCount { expected: n.saturating_sub(1), found: edges.len() });
        }
        let mut dsu = DisjointSet::new(n);
        for e in &edges {
            dsu.union(e.lo(), e.hi());
        }
        if dsu.components() != 1 {
            return Err(Rejection::Disconnected { components: dsu.components() });
        }
        if let Some((e, f)) = self.find_crossing(&edges) {
            return Err(Rejection::Crossing(e, f));
        }
        Ok(PlaneTree { n, edges })
    }
}

/// An induced subgraph together with the parent index of each child vertex.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: GeometricGraph,
    pub parent_index: Vec<usize>,
}

impl Subgraph {
    pub fn lift(&self, e: Edge) -> Edge {
        Edge::new(self.parent_index[e.lo()], self.parent_index[e.hi()])
    }
}

/// Why an edge set is not a plane spanning tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rejection {
    NotSubgraph(Edge),
    WrongCount { expected: usize, found: usize },
    Disconnected { components: usize },
    Crossing(Edge, Edge),
}

impl Rejection {
    /// Short machine-readable reason.
    pub fn kind(&self) -> &'static str {
        match self {
            Rejection::NotSubgraph(_) => "not-subgraph",
            Rejection::WrongCount { .. } => "wrong-count",
            Rejection::Disconnected { .. } => "disconnected",
            Rejection::Crossing(..) => "crossing",
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::NotSubgraph(e) => write!(f, "not-subgraph: edge {e} is not in the graph"),
            Rejection::WrongCount { expected, found } => {
                write!(f, "wrong-count: expected {expected} edges, found {found}")
            }
            Rejection::Disconnected { components } => {
                write!(f, "disconnected: {components} components")
            }
            Rejection::Crossing(a, b) => write!(f, "crossing: {a} crosses {b}"),
        }
    }
}

/// A certified crossing-free spanning tree. Only obtainable through
/// [`GeometricGraph::certify_plane_spanning_tree`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneTree {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl PlaneTree {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn into_edges(self) -> BTreeSet<Edge> {
        self.edges
    }
}
