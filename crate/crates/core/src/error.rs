use thiserror::Error;

use crate::geom::COORD_BOUND;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {index} = ({x}, {y}) exceeds the coordinate bound {}", COORD_BOUND)]
    CoordinateOutOfRange { index: usize, x: i64, y: i64 },
    #[error("orientation determinant overflow")]
    Overflow,
    #[error("degenerate (collinear) triangle")]
    DegenerateTriangle,
    #[error("points are not in general position")]
    NotGeneralPosition,
    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("indices must be distinct")]
    NonDistinct,
    #[error("need at least {needed} points, got {found}")]
    TooFewPoints { needed: usize, found: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("generation failed: {0}")]
    Generation(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
