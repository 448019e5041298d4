//! SVG output of a disk-polygon and its inner parallel sets.
//!
//! World coordinates are y-up; the viewport is y-down. A single affine map
//! `(x, y) ↦ (m + s(x − x₀), m + s(y₁ − y))` takes one to the other, so
//! counterclockwise world arcs are drawn with `sweep-flag = 0`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write as _;

use crate::disk_polygon::DiskPolygon;
use crate::error::Result;
use crate::geometry::Point2;
use crate::inner_parallel::inner_set;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgOptions {
    /// Pixels per world unit.
    pub scale: f64,
    /// Padding in pixels.
    pub margin: f64,
    pub stroke_width: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self {
            scale: 400.0,
            margin: 20.0,
            stroke_width: 1.5,
        }
    }
}

struct Viewport {
    x0: f64,
    y1: f64,
    scale: f64,
    margin: f64,
}

impl Viewport {
    fn map(&self, p: Point2) -> (f64, f64) {
        (
            self.margin + self.scale * (p.x - self.x0),
            self.margin + self.scale * (self.y1 - p.y),
        )
    }
}

/// Path data for one closed boundary: `M` then one `A` segment per arc.
fn path_data(p: &DiskPolygon, view: &Viewport) -> String {
    let r = p.radius() * view.scale;
    let mut d = String::new();
    if p.is_full_circle() {
        let c = p.centers()[0];
        let (ax, ay) = view.map(c + Point2::new(p.radius(), 0.0));
        let (bx, by) = view.map(c - Point2::new(p.radius(), 0.0));
        let _ = write!(
            d,
            "M {ax:.6} {ay:.6} A {r:.6} {r:.6} 0 0 0 {bx:.6} {by:.6} A {r:.6} {r:.6} 0 0 0 {ax:.6} {ay:.6} Z"
        );
        return d;
    }
    let (sx, sy) = view.map(p.arcs()[0].start);
    let _ = write!(d, "M {sx:.6} {sy:.6}");
    for arc in p.arcs() {
        let (x, y) = view.map(arc.end);
        let large = u8::from(arc.sweep > PI);
        let _ = write!(d, " A {r:.6} {r:.6} 0 {large} 0 {x:.6} {y:.6}");
    }
    d.push_str(" Z");
    d
}

/// Renders `p` and the inner parallel sets at `depths`, outermost first.
pub fn render(p: &DiskPolygon, depths: &[f64], opts: &SvgOptions) -> Result<String> {
    let inner = depths
        .iter()
        .map(|&t| inner_set(p, t))
        .collect::<Result<Vec<_>>>()?;

    let (x0, x1) = (-p.support(PI), p.support(0.0));
    let (y0, y1) = (-p.support(3.0 * FRAC_PI_2), p.support(FRAC_PI_2));
    let view = Viewport {
        x0,
        y1,
        scale: opts.scale,
        margin: opts.margin,
    };
    let width = 2.0 * opts.margin + opts.scale * (x1 - x0);
    let height = 2.0 * opts.margin + opts.scale * (y1 - y0);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.3}" height="{height:.3}" viewBox="0 0 {width:.3} {height:.3}">"#
    );
    let _ = writeln!(
        out,
        r#"  <path class="outer" fill="none" stroke="black" stroke-width="{}" d="{}"/>"#,
        opts.stroke_width,
        path_data(p, &view)
    );
    for (t, set) in depths.iter().zip(&inner) {
        let _ = writeln!(
            out,
            r#"  <path class="inner" data-t="{t}" data-arcs="{}" fill="none" stroke="steelblue" stroke-width="{}" d="{}"/>"#,
            set.arc_count(),
            opts.stroke_width,
            path_data(set, &view)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk_polygon::build_intersection;
    use crate::reuleaux::ReuleauxPolygon;

    fn arc_segments(path: &str) -> usize {
        path.matches(" A ").count()
    }

    #[test]
    fn triangle_with_depths() {
        let r = ReuleauxPolygon::triangle();
        let svg = render(
            r.underlying(),
            &[0.1, 0.2, 0.3, 0.4],
            &SvgOptions::default(),
        )
        .unwrap();
        let paths: Vec<&str> = svg.lines().filter(|l| l.contains("<path")).collect();
        assert_eq!(paths.len(), 5);
        assert!(paths
            .iter()
            .all(|p| arc_segments(p) == 3 && p.ends_with("Z\"/>")));
    }

    #[test]
    fn outer_only() {
        let svg = render(
            ReuleauxPolygon::regular(5).unwrap().underlying(),
            &[],
            &SvgOptions::default(),
        )
        .unwrap();
        assert_eq!(svg.matches("<path").count(), 1);
        assert_eq!(arc_segments(&svg), 5);
    }

    #[test]
    fn y_axis_flips() {
        let r = ReuleauxPolygon::triangle();
        let p = r.underlying();
        let view = Viewport {
            x0: -1.0,
            y1: 1.0,
            scale: 400.0,
            margin: 0.0,
        };
        assert_eq!(view.map(Point2::new(-1.0, 1.0)), (0.0, 0.0));
        assert_eq!(view.map(Point2::new(0.0, 0.0)), (400.0, 400.0));
        assert!(path_data(p, &view).starts_with("M "));
    }

    #[test]
    fn full_circle_two_halves() {
        let disk = build_intersection(&[Point2::ORIGIN], 0.5).unwrap();
        let svg = render(&disk, &[0.25], &SvgOptions::default()).unwrap();
        assert_eq!(arc_segments(&svg), 4);
        assert!(svg.contains(r#"width="440.000""#));
    }

    #[test]
    fn depth_past_inradius_errors() {
        let r = ReuleauxPolygon::triangle();
        assert!(render(r.underlying(), &[0.5], &SvgOptions::default()).is_err());
    }
}
