//! Plane spanning trees in geometric graphs with few disconnected empty
//! triangles.
//!
//! A geometric graph on `n >= 3` points in general position whose number of
//! disconnected empty triangles is at most `n - 3` always contains a
//! crossing-free spanning tree. [`builder::build_plane_tree`] constructs one
//! by sweeping a rotating halving line until both closed sides satisfy the
//! same bound, recursing on each side and merging. The remaining modules
//! provide the exact predicates, the sweep, a brute-force existence
//! [`oracle`], and generators for the extremal instance families.

pub mod builder;
mod dsu;
pub mod error;
pub mod generators;
pub mod geom;
pub mod graph;
pub mod oracle;
pub mod rotation;
pub mod triangles;

pub use error::{Error, Result};
pub use geom::{Point, PointSet};
pub use graph::{Edge, GeometricGraph, PlaneTree, Rejection};
