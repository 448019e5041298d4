//! Brute-force references for areas, perimeters and boundary distances.
//!
//! Nothing here reads the extracted boundary except
//! [`perimeter_sampled`], which walks the arcs with chords instead of
//! summing their measures. Areas work from the disk centers alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::disk_polygon::DiskPolygon;
use crate::error::{Error, Result};
use crate::geometry::{Point2, EPS_GEO};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    /// Grid cells per width unit.
    pub grid_resolution: usize,
    pub mc_samples: usize,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            grid_resolution: 2000,
            mc_samples: 1_000_000,
            seed: 0,
        }
    }
}

/// Axis-aligned box containing Ω: the intersection of the disks' boxes.
fn bounding_box(p: &DiskPolygon) -> (Point2, Point2) {
    let r = p.radius();
    let mut lo = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut hi = Point2::new(f64::INFINITY, f64::INFINITY);
    for c in p.centers() {
        lo.x = lo.x.max(c.x - r);
        lo.y = lo.y.max(c.y - r);
        hi.x = hi.x.min(c.x + r);
        hi.y = hi.y.min(c.y + r);
    }
    (lo, hi)
}

/// Counts grid cells whose centers lie in Ω, times the cell area.
///
/// Rows are handled exactly: on a horizontal line each disk is an interval,
/// so the cells of a row inside Ω are those whose centers fall in the
/// intersection of the intervals.
pub fn area_grid(p: &DiskPolygon, cfg: &OracleConfig) -> f64 {
    let h = 1.0 / cfg.grid_resolution.max(1) as f64;
    let r = p.radius() + EPS_GEO;
    let (lo, hi) = bounding_box(p);
    let row_first = (lo.y / h - 0.5).ceil() as i64;
    let row_last = (hi.y / h - 0.5).floor() as i64;
    let mut cells: u64 = 0;
    for row in row_first..=row_last {
        let y = (row as f64 + 0.5) * h;
        let mut left = f64::NEG_INFINITY;
        let mut right = f64::INFINITY;
        for c in p.centers() {
            let dy = y - c.y;
            let rad = r * r - dy * dy;
            if rad < 0.0 {
                right = f64::NEG_INFINITY;
                break;
            }
            let half = rad.sqrt();
            left = left.max(c.x - half);
            right = right.min(c.x + half);
        }
        if right < left {
            continue;
        }
        let first = (left / h - 0.5).ceil() as i64;
        let last = (right / h - 0.5).floor() as i64;
        if last >= first {
            cells += (last - first + 1) as u64;
        }
    }
    cells as f64 * h * h
}

/// Monte-Carlo area: uniform samples over the bounding box.
///
/// Returns `(estimate, standard error)`.
pub fn area_mc(p: &DiskPolygon, cfg: &OracleConfig) -> (f64, f64) {
    let (lo, hi) = bounding_box(p);
    let box_area = (hi.x - lo.x).max(0.0) * (hi.y - lo.y).max(0.0);
    let n = cfg.mc_samples.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let hits = (0..n)
        .filter(|_| {
            let q = Point2::new(rng.gen_range(lo.x..=hi.x), rng.gen_range(lo.y..=hi.y));
            p.contains_point(q)
        })
        .count();
    let frac = hits as f64 / n as f64;
    let stderr = box_area * (frac * (1.0 - frac) / n as f64).sqrt();
    (box_area * frac, stderr)
}

/// Sum of chord lengths, `chords_per_arc` chords on every arc.
pub fn perimeter_sampled(p: &DiskPolygon, chords_per_arc: usize) -> f64 {
    let m = chords_per_arc.max(2);
    let r = p.radius();
    p.arcs()
        .iter()
        .map(|arc| {
            let c = p.centers()[arc.center_index];
            let point =
                |j: usize| c + Point2::unit(arc.start_angle + arc.sweep * j as f64 / m as f64) * r;
            (0..m).map(|j| point(j).distance(point(j + 1))).sum::<f64>()
        })
        .sum()
}

/// `d(q, ∂Ω) = minᵢ (r − |q − cᵢ|)` for `q ∈ Ω`.
pub fn distance_to_boundary(p: &DiskPolygon, q: Point2) -> Result<f64> {
    if !p.contains_point(q) {
        return Err(Error::PointOutside);
    }
    let d = p
        .centers()
        .iter()
        .map(|&c| p.radius() - q.distance(c))
        .fold(f64::INFINITY, f64::min);
    Ok(d.max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk_polygon::build_intersection;
    use crate::inner_parallel::{incenter, inner_set, reuleaux_triangle_inradius};
    use crate::reuleaux::ReuleauxPolygon;
    use std::f64::consts::PI;

    fn unit_disk() -> DiskPolygon {
        build_intersection(&[Point2::ORIGIN], 1.0).unwrap()
    }

    #[test]
    fn grid_area_of_known_shapes() {
        let cfg = OracleConfig::default();
        assert!((area_grid(&unit_disk(), &cfg) - PI).abs() < 5e-3);
        let r = ReuleauxPolygon::triangle();
        let exact = (PI - 3f64.sqrt()) / 2.0;
        assert!((area_grid(r.underlying(), &cfg) - exact).abs() < 5e-3);
        let deep = inner_set(r.underlying(), reuleaux_triangle_inradius() - 1e-3).unwrap();
        assert!(area_grid(&deep, &cfg) < 1e-2);
    }

    #[test]
    fn monte_carlo_area() {
        let cfg = OracleConfig {
            mc_samples: 200_000,
            ..Default::default()
        };
        let (est, se) = area_mc(&unit_disk(), &cfg);
        assert!((est - PI).abs() <= 3.0 * se);
        let r = ReuleauxPolygon::triangle();
        let (est, se) = area_mc(r.underlying(), &cfg);
        assert!((est - r.underlying().area()).abs() <= 3.0 * se);
        assert_eq!(area_mc(r.underlying(), &cfg), (est, se));
    }

    #[test]
    fn chord_perimeter() {
        assert!((perimeter_sampled(&unit_disk(), 10_000) - 2.0 * PI).abs() < 1e-6);
        let r = ReuleauxPolygon::triangle();
        assert!((perimeter_sampled(r.underlying(), 10_000) - PI).abs() < 1e-6);
    }

    #[test]
    fn boundary_distance() {
        let r = ReuleauxPolygon::triangle();
        let p = r.underlying();
        let d = distance_to_boundary(p, incenter(p)).unwrap();
        assert!((d - reuleaux_triangle_inradius()).abs() < 1e-12);
        assert!(distance_to_boundary(p, p.vertices()[0].position).unwrap() < 1e-12);
        assert_eq!(
            distance_to_boundary(p, Point2::new(5.0, 5.0)).unwrap_err(),
            Error::PointOutside
        );
    }
}
