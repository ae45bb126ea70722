//! Instance families: the path complement on a convex polygon, the
//! perturbed-polygon construction with one point pushed inside, and random
//! graphs. Every claimed property is recomputed on the produced instance.

use rand::seq::IteratorRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{point_in_triangle, Point, PointSet, TriangleLocation, COORD_BOUND};
use crate::graph::{Edge, GeometricGraph};
use crate::triangles::{count_disconnected, empty_triangles_unchecked, s_count};

pub const DEFAULT_SCALE: i64 = 1_000_000;
/// Half-width of the coordinate box for random point sets.
pub const RANDOM_BOX: i64 = 1_000;
const SCALE_RETRIES: u32 = 8;
const PULL_RETRIES: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    PathComplement,
    RConstruction,
    RandomBudgeted,
    Complete,
    Custom,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::PathComplement => "path_complement",
            Family::RConstruction => "r_construction",
            Family::RandomBudgeted => "random_budgeted",
            Family::Complete => "complete",
            Family::Custom => "custom",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: GeometricGraph,
    pub family: Family,
    pub seed: Option<u64>,
    /// Verified number of disconnected empty triangles.
    pub s: usize,
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::TooFewPoints { needed: min, found: n })
    } else {
        Ok(())
    }
}

fn polygon(n: usize, radius: i64) -> Result<PointSet> {
    let r = radius as f64;
    let pts = (0..n)
        .map(|i| {
            let a = std::f64::consts::TAU * i as f64 / n as f64;
            Point::new((r * a.cos()).round() as i64, (r * a.sin()).round() as i64)
        })
        .collect();
    PointSet::new(pts)
}

/// Whether consecutive indices walk the hull counter-clockwise.
fn labelled_in_hull_order(ps: &PointSet) -> Result<bool> {
    let hull = ps.hull()?;
    let n = ps.len();
    if hull.len() != n {
        return Ok(false);
    }
    let start = hull.iter().position(|&v| v == 0).unwrap();
    Ok((0..n).all(|i| hull[(start + i) % n] == i))
}

/// `n` integer points rounded from a regular polygon of the given radius,
/// labelled counter-clockwise. Doubles the radius until the rounded points
/// are verified to be in convex and general position.
pub fn convex_position_points(n: usize, scale: i64) -> Result<PointSet> {
    check_n(n, 3)?;
    let mut radius = scale.max(1);
    for _ in 0..SCALE_RETRIES {
        if radius > COORD_BOUND {
            break;
        }
        let ps = polygon(n, radius)?;
        if ps.in_general_position() && labelled_in_hull_order(&ps)? {
            return Ok(ps);
        }
        radius *= 2;
    }
    Err(Error::Generation(format!("no convex {n}-gon found up to radius {radius}")))
}

fn path_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).map(|i| (i - 1, i))
}

/// The complement of the boundary path `u_1 ... u_n` of a convex polygon.
/// Fails if the rounded polygon does not have exactly `n - 2` disconnected
/// empty triangles.
pub fn path_complement(n: usize, scale: i64) -> Result<Instance> {
    check_n(n, 3)?;
    let ps = convex_position_points(n, scale)?;
    let graph = GeometricGraph::new(ps, path_edges(n))?.complement();
    let s = s_count(&graph)?.value;
    if s != n - 2 {
        return Err(Error::Generation(format!("path complement on {n} points has s = {s}, expected {}", n - 2)));
    }
    Ok(Instance { graph, family: Family::PathComplement, seed: None, s })
}

/// The plane path `v_1 ... v_{n-1} w` and its complement, where `v_i` is a
/// convex `(n-1)`-gon and `w` lies just inside `v_{n-3} v_{n-2} v_{n-1}`
/// near `v_{n-1}`. The complement must have exactly `n - 3` disconnected
/// empty triangles.
pub fn r_construction(n: usize, scale: i64) -> Result<(Instance, Instance)> {
    check_n(n, 5)?;
    let base = convex_position_points(n - 1, scale)?;
    let (a, b, v) = (base.point(n - 4), base.point(n - 3), base.point(n - 2));
    // three times the centroid, to stay in integers
    let (cx, cy) = (a.x + b.x + v.x, a.y + b.y + v.y);
    let mut den: i64 = 8;
    for _ in 0..PULL_RETRIES {
        let w = Point::new(
            v.x + ((cx - 3 * v.x) as f64 / (3 * den) as f64).round() as i64,
            v.y + ((cy - 3 * v.y) as f64 / (3 * den) as f64).round() as i64,
        );
        den *= 2;
        if point_in_triangle(w, a, b, v)? != TriangleLocation::Interior {
            continue;
        }
        let mut pts = base.points().to_vec();
        pts.push(w);
        let ps = PointSet::new(pts)?;
        if !ps.in_general_position() {
            continue;
        }
        let r = GeometricGraph::new(ps, path_edges(n))?;
        let rc = r.complement();
        let s_rc = s_count(&rc)?.value;
        if s_rc != n - 3 {
            continue;
        }
        let s_r = s_count(&r)?.value;
        return Ok((
            Instance { graph: r, family: Family::RConstruction, seed: None, s: s_r },
            Instance { graph: rc, family: Family::RConstruction, seed: None, s: s_rc },
        ));
    }
    Err(Error::Generation(format!("could not place the inner point for n = {n} at scale {scale}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomMode {
    /// All pairs are edges.
    Complete,
    /// Edges removed at random while `s <= n - 3` is preserved.
    Budgeted,
}

/// Uniform points in `[-RANDOM_BOX, RANDOM_BOX]^2`, each redrawn until it
/// keeps the set in general position.
pub fn random_points(n: usize, rng: &mut impl Rng) -> Result<PointSet> {
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    let retries = 10_000;
    'outer: while pts.len() < n {
        for _ in 0..retries {
            let p = Point::new(rng.gen_range(-RANDOM_BOX..=RANDOM_BOX), rng.gen_range(-RANDOM_BOX..=RANDOM_BOX));
            let ok = pts.iter().enumerate().all(|(i, &q)| {
                q != p && pts[i + 1..].iter().all(|&r| crate::geom::orient(q, r, p) != crate::geom::Orientation::Collinear)
            });
            if ok {
                pts.push(p);
                continue 'outer;
            }
        }
        return Err(Error::Generation(format!("could not place point {} in general position", pts.len())));
    }
    PointSet::new(pts)
}

/// Random instance on `n` points. In budgeted mode, starts from the
/// complete graph and tries `2 * C(n, 2)` random edge removals, undoing any
/// that push `s` above `n - 3`.
pub fn random_instance(n: usize, seed: u64, mode: RandomMode) -> Result<Instance> {
    check_n(n, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ps = random_points(n, &mut rng)?;
    let mut graph = GeometricGraph::complete(ps);
    let family = match mode {
        RandomMode::Complete => Family::Complete,
        RandomMode::Budgeted => {
            let triangles = empty_triangles_unchecked(graph.points());
            let limit = n - 3;
            let attempts = n * (n - 1);
            for _ in 0..attempts {
                let Some(e) = graph.edges().iter().copied().choose(&mut rng) else { break };
                graph.remove_edge(e);
                if count_disconnected(&graph, &triangles).value > limit {
                    graph.insert_edge(e)?;
                }
            }
            Family::RandomBudgeted
        }
    };
    let s = s_count(&graph)?.value;
    Ok(Instance { graph, family, seed: Some(seed), s })
}

/// Convenience: the complete graph on a random point set.
pub fn random_complete(n: usize, seed: u64) -> Result<Instance> {
    random_instance(n, seed, RandomMode::Complete)
}

/// Edges of the boundary path, as used by both families.
pub fn boundary_path(n: usize) -> Vec<Edge> {
    path_edges(n).map(|(a, b)| Edge::new(a, b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_convex_polygons() {
        let q = convex_position_points(4, 10).unwrap();
        assert_eq!(q.in_convex_position(), Ok(true));
        let t = convex_position_points(3, 1).unwrap();
        assert!(t.in_general_position());
    }

    #[test]
    fn convex_labels_follow_the_hull() {
        for n in 3..20 {
            let ps = convex_position_points(n, DEFAULT_SCALE).unwrap();
            assert!(labelled_in_hull_order(&ps).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn tiny_scale_is_grown() {
        // radius 1 cannot hold 12 distinct lattice points in convex position
        let ps = convex_position_points(12, 1).unwrap();
        assert_eq!(ps.in_convex_position(), Ok(true));
    }

    #[test]
    fn path_complement_five() {
        let inst = path_complement(5, DEFAULT_SCALE).unwrap();
        assert_eq!(inst.s, 3);
        let w = s_count(&inst.graph).unwrap().witnesses;
        let triples: Vec<[usize; 3]> = w.iter().map(|t| t.vertices()).collect();
        assert_eq!(triples, vec![[0, 1, 2], [1, 2, 3], [2, 3, 4]]);
    }

    #[test]
    fn r_construction_seven() {
        let (r, rc) = r_construction(7, DEFAULT_SCALE).unwrap();
        assert_eq!(rc.s, 4);
        assert_eq!(r.graph.edge_count(), 6);
        let ps = rc.graph.points();
        let loc = point_in_triangle(ps.point(6), ps.point(3), ps.point(4), ps.point(5)).unwrap();
        assert_eq!(loc, TriangleLocation::Interior);
        assert!(r.graph.is_crossing_free(r.graph.edges()));
        assert!(r_construction(4, DEFAULT_SCALE).is_err());
    }

    #[test]
    fn random_modes() {
        let c = random_instance(9, 1, RandomMode::Complete).unwrap();
        assert_eq!(c.s, 0);
        assert_eq!(c.graph.edge_count(), 36);
        for seed in 0..20 {
            let b = random_instance(8, seed, RandomMode::Budgeted).unwrap();
            assert!(b.s <= 5);
            assert!(b.graph.points().in_general_position());
        }
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_instance(10, 77, RandomMode::Budgeted).unwrap();
        let b = random_instance(10, 77, RandomMode::Budgeted).unwrap();
        assert_eq!(a, b);
        let c = random_instance(10, 78, RandomMode::Budgeted).unwrap();
        assert_ne!(a.graph, c.graph);
    }
}
