//! The rotating-line sweep that generates all k-sets of a point set.
//!
//! An oriented line through one point (the pivot) is turned clockwise until
//! it meets another point, which becomes the new pivot, and so on through a
//! full turn. Lines strictly between two consecutive events are never
//! materialised numerically: an intermediate line is the pivot plus the
//! direction it has just rotated past, and its side of any point is the
//! sign against that direction with a clockwise nudge for the one point
//! aligned with it. Angular progress is tracked only through exact
//! half-plane tests against the starting direction.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geom::{PointSet, Vector};

/// Position of a point relative to an oriented line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    On,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineKind {
    /// Strictly between two events. The line direction lies in the open
    /// clockwise interval from `after` to `until`.
    Intermediate { after: Vector, until: Vector },
    /// Passes through `pivot` and `reached`, pointing along `direction`.
    Event { reached: usize, direction: Vector },
}

/// One state of the sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrientedLine {
    pub pivot: usize,
    pub kind: LineKind,
}

fn side_from_sign(c: i128) -> Side {
    match c.signum() {
        1 => Side::Left,
        -1 => Side::Right,
        _ => Side::On,
    }
}

impl OrientedLine {
    pub fn is_event(&self) -> bool {
        matches!(self.kind, LineKind::Event { .. })
    }

    /// The second point on an event line.
    pub fn reached(&self) -> Option<usize> {
        match self.kind {
            LineKind::Event { reached, .. } => Some(reached),
            LineKind::Intermediate { .. } => None,
        }
    }

    pub fn side_of(&self, ps: &PointSet, q: usize) -> Side {
        if q == self.pivot {
            return Side::On;
        }
        let rel = ps.point(q).minus(ps.point(self.pivot));
        match self.kind {
            LineKind::Event { direction, .. } => side_from_sign(direction.cross(rel)),
            LineKind::Intermediate { after, .. } => match side_from_sign(after.cross(rel)) {
                // turning clockwise off `after` leaves the point ahead on
                // the left and the point behind on the right
                Side::On if after.dot(rel) > 0 => Side::Left,
                Side::On => Side::Right,
                s => s,
            },
        }
    }

    /// Side computed from the closing end of the interval instead (a nudge
    /// counter-clockwise of `until`); must agree with [`Self::side_of`].
    pub(crate) fn side_via_until(&self, ps: &PointSet, q: usize) -> Side {
        match self.kind {
            LineKind::Intermediate { until, .. } if q != self.pivot => {
                let rel = ps.point(q).minus(ps.point(self.pivot));
                match side_from_sign(until.cross(rel)) {
                    Side::On if until.dot(rel) > 0 => Side::Right,
                    Side::On => Side::Left,
                    s => s,
                }
            }
            _ => self.side_of(ps, q),
        }
    }
}

/// Closed sides of a line: `left` is on-or-left, `right` on-or-right.
/// Both lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SidePartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl SidePartition {
    pub fn in_left(&self, v: usize) -> bool {
        self.left.binary_search(&v).is_ok()
    }

    pub fn in_right(&self, v: usize) -> bool {
        self.right.binary_search(&v).is_ok()
    }

    /// Points on the line, i.e. in both closed sides.
    pub fn shared(&self) -> Vec<usize> {
        self.left.iter().copied().filter(|&v| self.in_right(v)).collect()
    }
}

pub fn side_partition(line: &OrientedLine, ps: &PointSet) -> SidePartition {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for q in 0..ps.len() {
        match line.side_of(ps, q) {
            Side::Left => left.push(q),
            Side::Right => right.push(q),
            Side::On => {
                left.push(q);
                right.push(q);
            }
        }
    }
    SidePartition { left, right }
}

/// Rank of `w` in clockwise order starting just past `reference`:
/// (0, 180) degrees, then [180, 360), then `reference` itself last.
fn clockwise_half(reference: Vector, w: Vector) -> u8 {
    match reference.cross(w).signum() {
        -1 => 0,
        1 => 1,
        _ if reference.dot(w) < 0 => 1,
        _ => 2,
    }
}

/// Orders directions by clockwise angle measured from just past `reference`.
fn clockwise_cmp(reference: Vector, a: Vector, b: Vector) -> Ordering {
    clockwise_half(reference, a)
        .cmp(&clockwise_half(reference, b))
        // within one half, `b` later iff it is clockwise of `a`
        .then_with(|| a.cross(b).cmp(&0))
}

/// First point met when turning the line through `pivot` clockwise from
/// just past `after`, and the direction of the line at that moment.
fn first_hit(ps: &PointSet, pivot: usize, after: Vector) -> (usize, Vector) {
    let origin = ps.point(pivot);
    (0..ps.len())
        .filter(|&p| p != pivot)
        .flat_map(|p| {
            let u = ps.point(p).minus(origin);
            [(p, u), (p, -u)]
        })
        .min_by(|a, b| clockwise_cmp(after, a.1, b.1))
        .expect("at least two points")
}

fn intermediate(ps: &PointSet, pivot: usize, after: Vector) -> OrientedLine {
    let (_, until) = first_hit(ps, pivot, after);
    OrientedLine { pivot, kind: LineKind::Intermediate { after, until } }
}

/// Size of the closed left side of the starting line.
pub fn halving_left_size(n: usize) -> usize {
    (n + 2) / 2
}

/// A direction `(1, t)` such that no line with that direction passes
/// through two points. Exists since only finitely many slopes are bad.
fn generic_direction(ps: &PointSet) -> Vector {
    (0..)
        .map(|t| Vector::new(1, t))
        .find(|d| {
            let mut proj: Vec<i128> = ps.points().iter().map(|p| d.cross(Vector::new(p.x, p.y))).collect();
            proj.sort_unstable();
            proj.windows(2).all(|w| w[0] != w[1])
        })
        .expect("finitely many degenerate directions")
}

/// Starting line: through exactly one point, with `ceil((n+1)/2)` points
/// on or left of it and `floor((n+1)/2)` on or right.
pub fn initial_halving_line(ps: &PointSet) -> Result<OrientedLine> {
    if ps.len() < 3 {
        return Err(Error::TooFewPoints { needed: 3, found: ps.len() });
    }
    ps.require_general_position()?;
    let d = generic_direction(ps);
    let mut order: Vec<usize> = (0..ps.len()).collect();
    // descending signed distance to the left of direction `d`
    order.sort_by_key(|&i| {
        let p = ps.point(i);
        std::cmp::Reverse(d.cross(Vector::new(p.x, p.y)))
    });
    let pivot = order[halving_left_size(ps.len()) - 1];
    Ok(intermediate(ps, pivot, d))
}

/// Turns an intermediate line clockwise to the next event. Returns the
/// event line and the intermediate line that follows it, pivoting on the
/// newly reached point.
pub fn next_event(line: &OrientedLine, ps: &PointSet) -> Result<(OrientedLine, OrientedLine)> {
    let LineKind::Intermediate { after, .. } = line.kind else {
        return Err(Error::Precondition("next_event needs an intermediate line".into()));
    };
    let (reached, direction) = first_hit(ps, line.pivot, after);
    let event = OrientedLine { pivot: line.pivot, kind: LineKind::Event { reached, direction } };
    Ok((event, intermediate(ps, reached, direction)))
}

/// True iff the line has triangle vertices strictly on both sides.
pub fn line_crosses_triangle(line: &OrientedLine, tri: [usize; 3], ps: &PointSet) -> bool {
    let sides = tri.map(|v| line.side_of(ps, v));
    sides.contains(&Side::Left) && sides.contains(&Side::Right)
}

/// The full turn `L_1, L(v_1, v_2), L_2, ..., L_s`, alternating
/// intermediate and event lines, with side partitions precomputed.
#[derive(Clone, Debug)]
pub struct RotationSequence {
    ps: PointSet,
    start_direction: Vector,
    states: Vec<OrientedLine>,
    partitions: Vec<SidePartition>,
    opposite: usize,
}

impl RotationSequence {
    pub fn points(&self) -> &PointSet {
        &self.ps
    }

    /// The generic direction of `L_1`.
    pub fn start_direction(&self) -> Vector {
        self.start_direction
    }

    /// All states in sweep order; even positions are intermediate lines.
    pub fn states(&self) -> &[OrientedLine] {
        &self.states
    }

    pub fn partition_of_state(&self, state: usize) -> &SidePartition {
        &self.partitions[state]
    }

    /// Number of intermediate lines `s` (the last repeats the first).
    pub fn line_count(&self) -> usize {
        self.states.len() / 2 + 1
    }

    /// Intermediate line `L_{i+1}` (0-based).
    pub fn line(&self, i: usize) -> &OrientedLine {
        &self.states[2 * i]
    }

    pub fn line_partition(&self, i: usize) -> &SidePartition {
        &self.partitions[2 * i]
    }

    /// Event line `L(v_{i+1}, v_{i+2})` (0-based), for `i < s - 1`.
    pub fn event(&self, i: usize) -> &OrientedLine {
        &self.states[2 * i + 1]
    }

    pub fn event_partition(&self, i: usize) -> &SidePartition {
        &self.partitions[2 * i + 1]
    }

    /// Pivot sequence `v_1, ..., v_s`.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.line_count()).map(|i| self.line(i).pivot).collect()
    }

    /// Index of the intermediate line antiparallel to `L_1`.
    pub fn opposite_index(&self) -> usize {
        self.opposite
    }

    /// Checks every structural property of the sweep; the error names the
    /// first violation.
    pub fn verify(&self) -> std::result::Result<(), String> {
        let n = self.ps.len();
        let k1 = halving_left_size(n);
        let s = self.line_count();
        for i in 0..s {
            let part = self.line_partition(i);
            if part.left.len() != k1 || part.right.len() != n + 1 - k1 {
                return Err(format!(
                    "L{}: |L-| = {}, |L+| = {}, expected {} and {}",
                    i + 1,
                    part.left.len(),
                    part.right.len(),
                    k1,
                    n + 1 - k1
                ));
            }
            let line = self.line(i);
            if let Some(q) = (0..n).find(|&q| line.side_of(&self.ps, q) != line.side_via_until(&self.ps, q)) {
                return Err(format!("L{}: point {q} classified differently at the two interval ends", i + 1));
            }
        }
        let pivots = self.pivots();
        if pivots[0] != pivots[s - 1] || self.line_partition(0) != self.line_partition(s - 1) {
            return Err("the turn does not close on the starting line".into());
        }
        for j in 0..s - 1 {
            let (vj, vn) = (pivots[j], pivots[j + 1]);
            let cur = self.line_partition(j);
            let nxt = self.line_partition(j + 1);
            let ev = self.event_partition(j);
            if self.event(j).reached() != Some(vn) || self.event(j).pivot != vj {
                return Err(format!("event {} does not join v{} and v{}", j + 1, j + 1, j + 2));
            }
            let swapped = |set: &[usize]| -> Vec<usize> {
                let mut v: Vec<usize> = set.iter().copied().filter(|&x| x != vj).collect();
                v.push(vn);
                v.sort_unstable();
                v
            };
            let with = |set: &[usize]| -> Vec<usize> {
                let mut v = set.to_vec();
                if !v.contains(&vn) {
                    v.push(vn);
                }
                v.sort_unstable();
                v
            };
            let left_swaps = nxt.right == cur.right && nxt.left == swapped(&cur.left);
            let right_swaps = nxt.left == cur.left && nxt.right == swapped(&cur.right);
            if left_swaps == right_swaps {
                return Err(format!("L{} -> L{}: update dichotomy fails", j + 1, j + 2));
            }
            let laws = if cur.in_right(vn) {
                ev.left == with(&cur.left) && ev.right == cur.right
            } else {
                ev.left == cur.left && ev.right == with(&cur.right)
            };
            if !laws {
                return Err(format!("event {}: side laws fail", j + 1));
            }
        }
        if n % 2 == 1 {
            let first = self.line_partition(0);
            let opp = self.line_partition(self.opposite);
            if opp.left != first.right || opp.right != first.left {
                return Err("odd n: opposite line is not the reversed starting line".into());
            }
        }
        Ok(())
    }

    /// Finds `(k, l)` with `i <= k < l < j`, pivot `v_k` in `tri`, `tri`
    /// inside `L_k^+` and `L_j^-`, and `L_l` crossing the triangle.
    /// Indices are 0-based intermediate-line positions.
    pub fn triangle_crossing_window(&self, i: usize, j: usize, tri: [usize; 3]) -> Result<(usize, usize)> {
        let n = self.ps.len();
        if i >= j || j >= self.line_count() {
            return Err(Error::Precondition(format!("need i < j < {}", self.line_count())));
        }
        if tri.iter().any(|&v| v >= n) || tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
            return Err(Error::Precondition("triangle needs three distinct valid indices".into()));
        }
        let in_right = |t: usize| tri.iter().all(|&v| self.line_partition(t).in_right(v));
        let in_left = |t: usize| tri.iter().all(|&v| self.line_partition(t).in_left(v));
        if !in_right(i) || !in_left(j) {
            return Err(Error::Precondition("triangle not inside L_i^+ and L_j^-".into()));
        }
        // at each step only the outgoing pivot can leave the right side
        let k = (i..j)
            .find(|&t| !in_right(t + 1))
            .ok_or_else(|| Error::Invariant("triangle never leaves the right side".into()))?;
        let l = k + 1;
        let ok = l < j
            && tri.contains(&self.line(k).pivot)
            && in_right(k)
            && line_crosses_triangle(self.line(l), tri, &self.ps);
        if ok {
            Ok((k, l))
        } else {
            Err(Error::Invariant(format!("no valid witness at k = {k}")))
        }
    }

    /// One line per state: position, kind, pivot(s), closed-side sizes and
    /// members.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let fmt_set = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        for (idx, (line, part)) in self.states.iter().zip(&self.partitions).enumerate() {
            let (kind, pivots) = match line.kind {
                LineKind::Intermediate { .. } => (format!("L{}", idx / 2 + 1), line.pivot.to_string()),
                LineKind::Event { reached, .. } => {
                    (format!("E{}", idx / 2 + 1), format!("{},{}", line.pivot, reached))
                }
            };
            let _ = writeln!(
                out,
                "{kind} pivot={pivots} |L-|={} |L+|={} left=[{}] right=[{}]",
                part.left.len(),
                part.right.len(),
                fmt_set(&part.left),
                fmt_set(&part.right)
            );
        }
        out
    }
}

/// Sweeps a full turn from [`initial_halving_line`].
pub fn full_rotation(ps: &PointSet) -> Result<RotationSequence> {
    let first = initial_halving_line(ps)?;
    let LineKind::Intermediate { after: start, .. } = first.kind else {
        unreachable!("starting line is intermediate")
    };
    let n = ps.len();
    // every event direction is distinct, and there are n(n-1) of them
    let max_events = n * (n - 1) + 1;
    let mut states = vec![first];
    let mut half = 0u8;
    let mut crossings = 0;
    let mut opposite = None;
    loop {
        let current = *states.last().unwrap();
        let LineKind::Intermediate { until, .. } = current.kind else { unreachable!() };
        let h = if start.cross(until) < 0 { 0 } else { 1 };
        if h != half {
            half = h;
            crossings += 1;
            if crossings == 1 {
                opposite = Some(states.len() / 2);
            } else {
                break;
            }
        }
        if states.len() / 2 >= max_events {
            return Err(Error::Invariant("rotation did not close".into()));
        }
        let (event, next) = next_event(&current, ps)?;
        states.push(event);
        states.push(next);
    }
    let partitions = states.iter().map(|l| side_partition(l, ps)).collect();
    let seq = RotationSequence {
        ps: ps.clone(),
        start_direction: start,
        states,
        partitions,
        opposite: opposite.expect("half turn precedes full turn"),
    };
    seq.verify().map_err(Error::Invariant)?;
    Ok(seq)
}
