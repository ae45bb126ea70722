//! Exact orientation predicates over integer coordinates.
//!
//! Every decision in the crate bottoms out in the sign of a 2x2 integer
//! determinant. Coordinates of a [`PointSet`] are bounded by [`COORD_BOUND`],
//! so differences fit in 32 bits and cross products in 64; the arithmetic is
//! carried out in `i128` with checked operations so that even raw [`Point`]
//! values outside the bound never produce a wrong sign silently.

use std::fmt;

use crate::error::{Error, Result};

/// Largest absolute coordinate accepted by [`PointSet::new`] (2^30).
pub const COORD_BOUND: i64 = 1 << 30;

/// A point with integer coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// The displacement `self - origin`.
    pub fn minus(self, origin: Point) -> Vector {
        Vector::new(self.x - origin.x, self.y - origin.y)
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point::new(x, y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A direction or displacement between two points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    pub x: i64,
    pub y: i64,
}

impl std::ops::Neg for Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        Vector::new(-self.x, -self.y)
    }
}

impl Vector {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// `self.x * other.y - self.y * other.x`; positive when `other` is
    /// counter-clockwise of `self`.
    pub fn cross(self, other: Vector) -> i128 {
        self.x as i128 * other.y as i128 - self.y as i128 * other.x as i128
    }

    pub fn dot(self, other: Vector) -> i128 {
        self.x as i128 * other.x as i128 + self.y as i128 * other.y as i128
    }
}

/// Turn direction of an ordered point triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    fn from_sign(v: i128) -> Self {
        match v.signum() {
            1 => Orientation::CounterClockwise,
            -1 => Orientation::Clockwise,
            _ => Orientation::Collinear,
        }
    }

    /// -1, 0 or +1.
    pub fn signum(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::CounterClockwise => Orientation::Clockwise,
        }
    }
}

/// Orientation of `c` relative to the directed line `a -> b`, or
/// [`Error::Overflow`] if the determinant does not fit in 128 bits.
pub fn try_orient(a: Point, b: Point, c: Point) -> Result<Orientation> {
    let d = |p: i64, q: i64| (p as i128).checked_sub(q as i128);
    let abx = d(b.x, a.x).ok_or(Error::Overflow)?;
    let aby = d(b.y, a.y).ok_or(Error::Overflow)?;
    let acx = d(c.x, a.x).ok_or(Error::Overflow)?;
    let acy = d(c.y, a.y).ok_or(Error::Overflow)?;
    let lhs = abx.checked_mul(acy).ok_or(Error::Overflow)?;
    let rhs = aby.checked_mul(acx).ok_or(Error::Overflow)?;
    let det = lhs.checked_sub(rhs).ok_or(Error::Overflow)?;
    Ok(Orientation::from_sign(det))
}

/// Orientation of `c` relative to the directed line `a -> b`.
///
/// Panics if the determinant overflows, which cannot happen for points of a
/// [`PointSet`].
pub fn orient(a: Point, b: Point, c: Point) -> Orientation {
    match try_orient(a, b, c) {
        Ok(o) => o,
        Err(_) => panic!("orientation determinant overflow for {a}, {b}, {c}"),
    }
}

/// True iff the open segments `pq` and `rs` meet in a single point interior
/// to both. Touching at a shared endpoint is not a crossing.
pub fn segments_properly_cross(p: Point, q: Point, r: Point, s: Point) -> bool {
    let o1 = orient(p, q, r);
    let o2 = orient(p, q, s);
    let o3 = orient(r, s, p);
    let o4 = orient(r, s, q);
    o1 != Orientation::Collinear
        && o2 != Orientation::Collinear
        && o3 != Orientation::Collinear
        && o4 != Orientation::Collinear
        && o1 != o2
        && o3 != o4
}

/// Where a point lies with respect to a closed triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleLocation {
    Interior,
    Boundary,
    Outside,
}

pub fn point_in_triangle(p: Point, a: Point, b: Point, c: Point) -> Result<TriangleLocation> {
    let turn = orient(a, b, c);
    if turn == Orientation::Collinear {
        return Err(Error::DegenerateTriangle);
    }
    let edges = [orient(a, b, p), orient(b, c, p), orient(c, a, p)];
    if edges.iter().all(|&o| o == turn) {
        Ok(TriangleLocation::Interior)
    } else if edges.iter().any(|&o| o == turn.reversed()) {
        Ok(TriangleLocation::Outside)
    } else {
        Ok(TriangleLocation::Boundary)
    }
}

/// An indexed set of points with coordinates within [`COORD_BOUND`].
///
/// Distinctness and general position are not enforced here; operations that
/// need them check [`PointSet::in_general_position`] themselves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        for (index, p) in points.iter().enumerate() {
            if p.x.abs() > COORD_BOUND || p.y.abs() > COORD_BOUND {
                return Err(Error::CoordinateOutOfRange { index, x: p.x, y: p.y });
            }
        }
        Ok(Self { points })
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().copied().map(Point::from).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, index: usize) -> Point {
        self.points[index]
    }

    pub fn orient(&self, a: usize, b: usize, c: usize) -> Orientation {
        orient(self.points[a], self.points[b], self.points[c])
    }

    /// The sub-point-set on `indices`, in the given order.
    pub fn subset(&self, indices: &[usize]) -> Result<PointSet> {
        let points = indices
            .iter()
            .map(|&i| {
                self.points
                    .get(i)
                    .copied()
                    .ok_or(Error::IndexOutOfRange { index: i, len: self.points.len() })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PointSet { points })
    }

    /// All points distinct and no three collinear.
    pub fn in_general_position(&self) -> bool {
        let n = self.points.len();
        for i in 0..n {
            for j in i + 1..n {
                if self.points[i] == self.points[j] {
                    return false;
                }
                for k in j + 1..n {
                    if self.orient(i, j, k) == Orientation::Collinear {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn require_general_position(&self) -> Result<()> {
        if self.in_general_position() {
            Ok(())
        } else {
            Err(Error::NotGeneralPosition)
        }
    }

    /// Indices of the convex hull vertices in counter-clockwise order
    /// (monotone chain). Requires general position.
    pub fn hull(&self) -> Result<Vec<usize>> {
        self.require_general_position()?;
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.points[i]);
        if order.len() < 3 {
            return Ok(order);
        }
        let mut hull: Vec<usize> = Vec::with_capacity(2 * order.len());
        for pass in 0..2 {
            let start = hull.len();
            let seq: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
                Box::new(order.iter())
            } else {
                Box::new(order.iter().rev())
            };
            for &i in seq {
                while hull.len() >= start + 2
                    && self.orient(hull[hull.len() - 2], hull[hull.len() - 1], i)
                        != Orientation::CounterClockwise
                {
                    hull.pop();
                }
                hull.push(i);
            }
            hull.pop();
        }
        Ok(hull)
    }

    /// Every point is a vertex of the convex hull.
    pub fn in_convex_position(&self) -> Result<bool> {
        Ok(self.hull()?.len() == self.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(p(0, 0), p(1, 0), p(0, 1)).signum(), 1);
        assert_eq!(orient(p(0, 0), p(1, 1), p(2, 2)).signum(), 0);
        assert_eq!(orient(p(0, 0), p(0, 1), p(1, 0)).signum(), -1);
    }

    #[test]
    fn orient_overflow_is_reported() {
        let big = i64::MAX;
        assert_eq!(try_orient(p(-big, -big), p(big, big), p(-big, big)), Err(Error::Overflow));
    }

    #[test]
    fn crossing_examples() {
        assert!(segments_properly_cross(p(0, 0), p(2, 2), p(0, 2), p(2, 0)));
        assert!(!segments_properly_cross(p(0, 0), p(1, 0), p(0, 0), p(0, 1)));
        assert!(!segments_properly_cross(p(0, 0), p(1, 0), p(3, 3), p(4, 4)));
        // T-junction: touching in the interior of one segment only
        assert!(!segments_properly_cross(p(0, 0), p(2, 0), p(1, 0), p(1, 3)));
    }

    #[test]
    fn triangle_location_examples() {
        let (a, b, c) = (p(0, 0), p(3, 0), p(0, 3));
        assert_eq!(point_in_triangle(p(1, 1), a, b, c), Ok(TriangleLocation::Interior));
        assert_eq!(point_in_triangle(p(0, 0), a, b, c), Ok(TriangleLocation::Boundary));
        assert_eq!(point_in_triangle(p(5, 5), a, b, c), Ok(TriangleLocation::Outside));
        assert_eq!(point_in_triangle(p(1, 0), a, b, c), Ok(TriangleLocation::Boundary));
        assert_eq!(
            point_in_triangle(p(1, 1), p(0, 0), p(1, 1), p(2, 2)),
            Err(Error::DegenerateTriangle)
        );
    }

    #[test]
    fn general_position_examples() {
        let ps = |c: &[(i64, i64)]| PointSet::from_coords(c).unwrap();
        assert!(!ps(&[(0, 0), (1, 0), (2, 0)]).in_general_position());
        assert!(ps(&[(0, 0), (1, 0), (0, 1)]).in_general_position());
        assert!(!ps(&[(0, 0), (0, 0), (1, 1)]).in_general_position());
    }

    #[test]
    fn convex_position_examples() {
        let ps = |c: &[(i64, i64)]| PointSet::from_coords(c).unwrap();
        assert_eq!(ps(&[(0, 0), (2, 0), (2, 2), (0, 2)]).in_convex_position(), Ok(true));
        assert_eq!(
            ps(&[(0, 0), (4, 0), (4, 4), (0, 4), (1, 2)]).in_convex_position(),
            Ok(false)
        );
        assert_eq!(ps(&[(0, 0), (5, 1), (2, 7)]).in_convex_position(), Ok(true));
        assert_eq!(
            ps(&[(0, 0), (1, 0), (2, 0)]).in_convex_position(),
            Err(Error::NotGeneralPosition)
        );
    }

    #[test]
    fn coordinate_bound_enforced() {
        let err = PointSet::from_coords(&[(0, 0), (COORD_BOUND + 1, 0)]).unwrap_err();
        assert!(matches!(err, Error::CoordinateOutOfRange { index: 1, .. }));
        assert!(PointSet::from_coords(&[(COORD_BOUND, -COORD_BOUND)]).is_ok());
    }

    #[test]
    fn hull_is_counter_clockwise() {
        let ps = PointSet::from_coords(&[(0, 0), (4, 0), (1, 2), (4, 4), (0, 4)]).unwrap();
        let hull = ps.hull().unwrap();
        assert_eq!(hull.len(), 4);
        for w in 0..hull.len() {
            let (a, b, c) = (hull[w], hull[(w + 1) % 4], hull[(w + 2) % 4]);
            assert_eq!(ps.orient(a, b, c), Orientation::CounterClockwise);
        }
    }
}
