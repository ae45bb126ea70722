//! Static SVG rendering of a graph and an optional tree.
//!
//! The viewBox is the bounding box of the points plus a 5% margin on each
//! side; y is flipped so that the picture has the usual mathematical
//! orientation. Sizes are fractions of the larger box side.

use std::fmt::Write as _;

use planetree::GeometricGraph;

const MARGIN: f64 = 0.05;
const POINT_RADIUS: f64 = 0.012;
const GRAPH_STROKE: f64 = 0.002;
const TREE_STROKE: f64 = 0.007;
const GRAPH_COLOR: &str = "#b0b0b0";
const TREE_COLOR: &str = "#c0392b";
const POINT_COLOR: &str = "#1f1f1f";
const LABEL_SIZE: f64 = 0.03;

pub fn render(g: &GeometricGraph, tree: Option<&[(usize, usize)]>) -> String {
    let pts = g.points().points();
    let (min_x, max_x) = pts.iter().fold((i64::MAX, i64::MIN), |(lo, hi), p| (lo.min(p.x), hi.max(p.x)));
    let (min_y, max_y) = pts.iter().fold((i64::MAX, i64::MIN), |(lo, hi), p| (lo.min(p.y), hi.max(p.y)));
    let span = ((max_x - min_x).max(max_y - min_y)).max(1) as f64;
    let w = (max_x - min_x) as f64 + 2.0 * MARGIN * span;
    let h = (max_y - min_y) as f64 + 2.0 * MARGIN * span;
    let x0 = min_x as f64 - MARGIN * span;
    let y0 = -(max_y as f64) - MARGIN * span;
    let at = |i: usize| (pts[i].x as f64, -(pts[i].y as f64));

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{x0} {y0} {w} {h}">"#
    );
    let _ = writeln!(out, r#"<g stroke="{GRAPH_COLOR}" stroke-width="{}">"#, GRAPH_STROKE * span);
    for e in g.edges() {
        let ((ax, ay), (bx, by)) = (at(e.lo()), at(e.hi()));
        let _ = writeln!(out, r#"<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>"#);
    }
    let _ = writeln!(out, "</g>");
    if let Some(tree) = tree {
        let _ = writeln!(out, r#"<g stroke="{TREE_COLOR}" stroke-width="{}">"#, TREE_STROKE * span);
        for &(a, b) in tree {
            let ((ax, ay), (bx, by)) = (at(a), at(b));
            let _ = writeln!(out, r#"<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>"#);
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, r#"<g fill="{POINT_COLOR}" font-size="{}">"#, LABEL_SIZE * span);
    for i in 0..pts.len() {
        let (x, y) = at(i);
        let r = POINT_RADIUS * span;
        let _ = writeln!(out, r#"<circle cx="{x}" cy="{y}" r="{r}"/>"#);
        let _ = writeln!(out, r#"<text x="{}" y="{}">{i}</text>"#, x + 1.5 * r, y - 1.5 * r);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use planetree::PointSet;

    #[test]
    fn view_box_has_margin() {
        let ps = PointSet::from_coords(&[(0, 0), (100, 0), (0, 100)]).unwrap();
        let g = GeometricGraph::complete(ps);
        let svg = render(&g, Some(&[(0, 1), (0, 2)]));
        assert!(svg.contains(r#"viewBox="-5 -105 110 110""#), "{svg}");
        assert_eq!(svg.matches("<line").count(), 5);
        assert_eq!(svg.matches("<circle").count(), 3);
    }
}
