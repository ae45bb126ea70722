//! The JSON instance format: `{"edges": [[i, j], ...], "points": [[x, y], ...]}`.
//!
//! Coordinates and indices are integers; a float anywhere is a parse error.
//! Output is canonical: keys sorted, points in index order, edges as sorted
//! `[min, max]` pairs.

use std::fmt;
use std::path::Path;

use planetree::{Edge, GeometricGraph, Point, PointSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
    pub points: Vec<[i64; 2]>,
}

#[derive(Debug)]
pub struct LoadError(pub String);

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for LoadError {}

impl InstanceFile {
    pub fn from_graph(g: &GeometricGraph) -> Self {
        Self {
            edges: Some(g.edges().iter().map(|e| [e.lo(), e.hi()]).collect()),
            points: g.points().points().iter().map(|p| [p.x, p.y]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self, LoadError> {
        serde_json::from_str(text).map_err(|e| LoadError(format!("invalid instance JSON: {e}")))
    }

    /// Converts to a validated graph. With `require_edges`, a missing
    /// `edges` key is an error; otherwise it means no edges.
    pub fn into_graph(self, require_edges: bool) -> Result<GeometricGraph, LoadError> {
        let pts: Vec<Point> = self.points.iter().map(|&[x, y]| Point::new(x, y)).collect();
        let ps = PointSet::new(pts).map_err(|e| LoadError(format!("points: {e}")))?;
        if !ps.in_general_position() {
            return Err(LoadError("points: not in general position (duplicate or collinear triple)".into()));
        }
        let edges = match self.edges {
            Some(e) => e,
            None if require_edges => return Err(LoadError("missing field `edges`".into())),
            None => Vec::new(),
        };
        GeometricGraph::new(ps, edges.into_iter().map(|[a, b]| (a, b)))
            .map_err(|e| LoadError(format!("edges: {e}")))
    }
}

pub fn load(path: &Path, require_edges: bool) -> Result<GeometricGraph, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|e| LoadError(format!("{}: {e}", path.display())))?;
    InstanceFile::parse(&text)
        .and_then(|f| f.into_graph(require_edges))
        .map_err(|e| LoadError(format!("{}: {e}", path.display())))
}

pub fn save(path: &Path, g: &GeometricGraph) -> std::io::Result<()> {
    std::fs::write(path, InstanceFile::from_graph(g).to_json())
}

/// Parses a `[[i, j], ...]` edge list, inline or from a file.
pub fn parse_edge_list(arg: &str) -> Result<Vec<Edge>, LoadError> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| LoadError(format!("{arg}: {e}")))?
    };
    let pairs: Vec<[usize; 2]> =
        serde_json::from_str(&text).map_err(|e| LoadError(format!("invalid edge list: {e}")))?;
    pairs
        .into_iter()
        .map(|[a, b]| Edge::try_new(a, b).map_err(|e| LoadError(format!("edge list: {e}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        let text = r#"{"points": [[0, 0], [4, 1], [1, 5]], "edges": [[2, 0], [1, 0]]}"#;
        let g = InstanceFile::parse(text).unwrap().into_graph(true).unwrap();
        let out = InstanceFile::from_graph(&g).to_json();
        assert_eq!(out, "{\"edges\":[[0,1],[0,2]],\"points\":[[0,0],[4,1],[1,5]]}\n");
        let again = InstanceFile::parse(&out).unwrap().into_graph(true).unwrap();
        assert_eq!(again, g);
        assert_eq!(InstanceFile::from_graph(&again).to_json(), out);
    }

    #[test]
    fn floats_are_rejected() {
        let err = InstanceFile::parse(r#"{"points": [[0.5, 0], [4, 1], [1, 5]], "edges": []}"#).unwrap_err();
        assert!(err.0.contains("line 1"), "{err}");
        assert!(InstanceFile::parse(r#"{"points": [[0, 0]], "edges": [[0, 1.0]]}"#).is_err());
    }

    #[test]
    fn edges_optional_only_when_allowed() {
        let f = || InstanceFile::parse(r#"{"points": [[0, 0], [4, 1], [1, 5]]}"#).unwrap();
        assert!(f().into_graph(true).is_err());
        assert_eq!(f().into_graph(false).unwrap().edge_count(), 0);
    }

    #[test]
    fn validation_messages_name_the_field() {
        let bad = InstanceFile::parse(r#"{"points": [[0, 0], [1, 1], [2, 2]], "edges": []}"#).unwrap();
        assert!(bad.into_graph(true).unwrap_err().0.starts_with("points:"));
        let bad = InstanceFile::parse(r#"{"points": [[0, 0], [4, 1], [1, 5]], "edges": [[0, 3]]}"#).unwrap();
        assert!(bad.into_graph(true).unwrap_err().0.starts_with("edges:"));
    }

    #[test]
    fn inline_edge_list() {
        let e = parse_edge_list("[[1, 0], [2, 1]]").unwrap();
        assert_eq!(e, vec![Edge::new(0, 1), Edge::new(1, 2)]);
        assert!(parse_edge_list("[[1, 1]]").is_err());
    }
}
