//! Reuleaux polygons: odd-arc, width-1 disk-polygons whose arcs are
//! centered at boundary vertices.
//!
//! Construction walks the circle of outward normal directions. For
//! `n = 2k + 1` arcs the normal circle splits into `2n` intervals,
//! alternating arc and vertex, in the order
//! `θ₀, θ_{k+1}, θ₁, θ_{k+2}, …`: the vertex between arcs `i` and `i + 1`
//! turns by the measure of the arc it is the center of, `θ_{i+k+1}`. Along
//! an arc interval the boundary point moves on a unit circle; along a vertex
//! interval it stays put.
//!
//! The walk only closes when the angles satisfy two extra (closure)
//! equations on top of `Σθᵢ = π`, so [`ReuleauxPolygon::from_angles`]
//! checks closure and [`ReuleauxPolygon::random`] samples angle sequences
//! that close by construction.

use std::f64::consts::{FRAC_PI_3, PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::disk_polygon::{build_intersection, DiskPolygon};
use crate::error::{Error, Result};
use crate::geometry::{circle_circle_intersection, Point2};

/// Tolerance on `Σθᵢ = π`, on closure, and on the arc center/vertex match.
pub const ANGLE_TOL: f64 = 1e-9;

/// Smallest arc measure produced by [`ReuleauxPolygon::random`].
pub const MIN_RANDOM_ANGLE: f64 = 1e-3;

const MAX_RANDOM_ATTEMPTS: usize = 1_000_000;

/// Arc measures `θ₀ … θ_{n−1}`, `n` odd, each in `(0, π/3]`, summing to π.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct AngleSequence(Vec<f64>);

impl AngleSequence {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        let n = values.len();
        if n.is_multiple_of(2) {
            return Err(Error::ParityViolation(n));
        }
        if n < 3 {
            return Err(Error::InvalidOrder(n));
        }
        for (index, &value) in values.iter().enumerate() {
            if !(value > 0.0 && value <= FRAC_PI_3 + 1e-12) {
                return Err(Error::AngleRangeViolation { index, value });
            }
        }
        let sum: f64 = values.iter().sum();
        if (sum - PI).abs() > ANGLE_TOL {
            return Err(Error::AngleSumViolation { sum });
        }
        Ok(Self(values))
    }

    pub fn regular(n: usize) -> Result<Self> {
        check_order(n)?;
        Self::new(vec![PI / n as f64; n])
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<f64>> for AngleSequence {
    type Error = Error;
    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<AngleSequence> for Vec<f64> {
    fn from(a: AngleSequence) -> Self {
        a.0
    }
}

fn check_order(n: usize) -> Result<()> {
    if n < 3 || n.is_multiple_of(2) {
        Err(Error::InvalidOrder(n))
    } else {
        Ok(())
    }
}

/// A width-1 Reuleaux polygon.
///
/// Vertex `v_i` is the start of arc `i`; arc `i` is centered at
/// `v_{i+k+1}`. The shape is normalized so that the vertex centroid is the
/// origin and `v_0` lies on the positive x-axis.
#[derive(Debug, Clone, PartialEq)]
pub struct ReuleauxPolygon {
    angles: AngleSequence,
    vertices: Vec<Point2>,
    underlying: DiskPolygon,
}

impl ReuleauxPolygon {
    /// Regular Reuleaux polygon with `n` arcs.
    pub fn regular(n: usize) -> Result<Self> {
        Self::from_angles(&AngleSequence::regular(n)?)
    }

    /// The Reuleaux triangle of width 1.
    pub fn triangle() -> Self {
        Self::regular(3).expect("n = 3 is valid")
    }

    pub fn from_angles(angles: &AngleSequence) -> Result<Self> {
        let theta = angles.values();
        let n = theta.len();
        let k = (n - 1) / 2;

        let mut points = Vec::with_capacity(n + 1);
        let mut phi = 0.0_f64;
        let mut p = Point2::ORIGIN;
        points.push(p);
        for i in 0..n {
            p = p + Point2::unit(phi + theta[i]) - Point2::unit(phi);
            phi += theta[i] + theta[(i + 1 + k) % n];
            points.push(p);
        }
        let closure = points[n].distance(points[0]);
        points.truncate(n);

        // arc i runs from v_i to v_{i+1} on the unit circle about v_{i+k+1}
        let center_defect = (0..n)
            .flat_map(|i| {
                let c = points[(i + k + 1) % n];
                [
                    (c.distance(points[i]) - 1.0).abs(),
                    (c.distance(points[(i + 1) % n]) - 1.0).abs(),
                ]
            })
            .fold(0.0, f64::max);
        let defect = closure.max(center_defect);
        if !(defect <= ANGLE_TOL) {
            return Err(Error::ClosureViolation { defect });
        }

        let centroid = points.iter().fold(Point2::ORIGIN, |acc, &q| acc + q) * (1.0 / n as f64);
        let spin = -(points[0] - centroid).direction();
        let vertices: Vec<Point2> = points
            .iter()
            .map(|&q| (q - centroid).rotate(spin))
            .collect();

        let centers: Vec<Point2> = (0..n).map(|i| vertices[(i + k + 1) % n]).collect();
        let underlying = build_intersection(&centers, 1.0)?;
        if underlying.arc_count() != n {
            return Err(Error::DegenerateIntersection);
        }
        Ok(Self {
            angles: angles.clone(),
            vertices,
            underlying,
        })
    }

    /// Random Reuleaux polygon with `n` arcs, deterministic in `seed`.
    ///
    /// Angles are drawn from a flat Dirichlet distribution scaled to π and
    /// rejected until every entry lies in `[MIN_RANDOM_ANGLE, π/3]`. The
    /// vertices, visited in star order `v_0, v_{k+1}, v_{2(k+1)}, …`, form
    /// an equilateral polygon with unit edges whose interior angles are the
    /// arc measures; the first `n − 3` sampled interior angles are kept and
    /// the last three are solved for so that the star closes.
    pub fn random(n: usize, seed: u64) -> Result<Self> {
        check_order(n)?;
        if n == 3 {
            return Self::regular(3);
        }
        let k = (n - 1) / 2;
        // star position m visits vertex j = m(k+1) mod n; its interior angle is θ_{j+k}
        let arc_at = |m: usize| ((m * (k + 1)) % n + k) % n;

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..MAX_RANDOM_ATTEMPTS {
            let mut theta: Vec<f64> = (0..n).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
            let total: f64 = theta.iter().sum();
            theta.iter_mut().for_each(|x| *x *= PI / total);
            if theta
                .iter()
                .any(|&x| !(MIN_RANDOM_ANGLE..=FRAC_PI_3).contains(&x))
            {
                continue;
            }
            let star: Vec<f64> = (0..n).map(|m| theta[arc_at(m)]).collect();
            let Some(star) = close_star(&star) else {
                continue;
            };
            let mut closed = vec![0.0; n];
            for (m, &a) in star.iter().enumerate() {
                closed[arc_at(m)] = a;
            }
            let Ok(seq) = AngleSequence::new(closed) else {
                continue;
            };
            if let Ok(shape) = Self::from_angles(&seq) {
                return Ok(shape);
            }
        }
        Err(Error::Infeasible(format!(
            "no closing angle sequence found for n = {n}"
        )))
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn angles(&self) -> &AngleSequence {
        &self.angles
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    /// The shape as an intersection of unit disks.
    pub fn underlying(&self) -> &DiskPolygon {
        &self.underlying
    }

    /// Center of arc `i`, which is vertex `v_{i+k+1}`.
    pub fn arc_center(&self, i: usize) -> Point2 {
        let n = self.order();
        self.vertices[(i + (n - 1) / 2 + 1) % n]
    }

    /// True when every arc measure is π/3 (the Reuleaux triangle).
    pub fn is_triangle(&self) -> bool {
        self.order() == 3
            && self
                .angles
                .values()
                .iter()
                .all(|&a| (a - FRAC_PI_3).abs() <= ANGLE_TOL)
    }
}

/// Completes star-polygon interior angles so the unit-edge star closes.
///
/// `star[1..n-2]` fix the first `n − 2` edge directions; the last two edges
/// are the two unit segments joining the open end back to the start. Returns
/// the full set of interior angles, or `None` if no admissible completion
/// exists.
fn close_star(star: &[f64]) -> Option<Vec<f64>> {
    let n = star.len();
    let mut edges = Vec::with_capacity(n);
    edges.push(Point2::new(1.0, 0.0));
    for &a in &star[1..n - 2] {
        let last = *edges.last().expect("non-empty");
        edges.push(last.rotate(-(PI - a)));
    }
    let open_end = edges.iter().fold(Point2::ORIGIN, |acc, &e| acc + e);
    let candidates = circle_circle_intersection(open_end, Point2::ORIGIN, 1.0).ok()?;
    for joint in candidates {
        let mut all = edges.clone();
        all.push(joint - open_end);
        all.push(-joint);
        let interior: Vec<f64> = (0..n)
            .map(|m| {
                let prev = all[(m + n - 1) % n];
                let next = all[m];
                let turn = prev.cross(next).atan2(prev.dot(next));
                PI + turn
            })
            .collect();
        let sum: f64 = interior.iter().sum();
        if interior
            .iter()
            .all(|&a| (MIN_RANDOM_ANGLE..=FRAC_PI_3).contains(&a))
            && (sum - PI).abs() <= ANGLE_TOL
        {
            return Some(interior);
        }
    }
    None
}

/// Largest `|w(θ) − 1|` over `directions` evenly spaced directions.
pub fn validate_constant_width(shape: &DiskPolygon, directions: usize) -> f64 {
    let directions = directions.max(2);
    (0..directions)
        .map(|j| {
            let phi = TAU * j as f64 / directions as f64;
            (shape.width(phi) - 1.0).abs()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_triangle_matches_classical_construction() {
        let r = ReuleauxPolygon::regular(3).unwrap();
        assert!(r.is_triangle());
        let area = r.underlying().area();
        assert!((area - (PI - 3f64.sqrt()) / 2.0).abs() < 1e-12);
        for i in 0..3 {
            for j in 0..i {
                assert!((r.vertices()[i].distance(r.vertices()[j]) - 1.0).abs() < 1e-12);
            }
        }
        assert!(r.vertices()[0].y.abs() < 1e-15 && r.vertices()[0].x > 0.0);
    }

    #[test]
    fn invalid_orders() {
        for n in [0, 1, 2, 4, 10] {
            assert!(matches!(
                ReuleauxPolygon::regular(n),
                Err(Error::InvalidOrder(_))
            ));
        }
        assert!(matches!(
            ReuleauxPolygon::random(6, 1),
            Err(Error::InvalidOrder(6))
        ));
    }

    #[test]
    fn angle_sequence_errors() {
        assert_eq!(
            AngleSequence::new(vec![PI / 4.0; 4]).unwrap_err(),
            Error::ParityViolation(4)
        );
        assert!(matches!(
            AngleSequence::new(vec![1.0, 1.0, 1.0]),
            Err(Error::AngleSumViolation { .. })
        ));
        assert!(matches!(
            AngleSequence::new(vec![1.2, 1.0, PI - 2.2]),
            Err(Error::AngleRangeViolation { index: 0, .. })
        ));
        assert!(matches!(
            AngleSequence::new(vec![0.0, FRAC_PI_3, FRAC_PI_3, FRAC_PI_3, FRAC_PI_3]),
            Err(Error::AngleRangeViolation { index: 0, .. })
        ));
    }

    #[test]
    fn non_closing_sequence_is_reported() {
        // valid range and sum, but violates the closure equations
        let seq = AngleSequence::new(vec![0.9, 0.9, 0.9, 0.25, PI - 2.95]).unwrap();
        match ReuleauxPolygon::from_angles(&seq) {
            Err(Error::ClosureViolation { defect }) => assert!(defect > 1.0),
            other => panic!("expected closure violation, got {other:?}"),
        }
    }

    #[test]
    fn regular_pentagon_from_angles() {
        let a = AngleSequence::new(vec![PI / 5.0; 5]).unwrap();
        let p = ReuleauxPolygon::from_angles(&a).unwrap();
        assert_eq!(p, ReuleauxPolygon::regular(5).unwrap());
        assert!(validate_constant_width(p.underlying(), 360) < 1e-12);
    }

    #[test]
    fn random_is_deterministic() {
        let a = ReuleauxPolygon::random(5, 1).unwrap();
        let b = ReuleauxPolygon::random(5, 1).unwrap();
        assert_eq!(a, b);
        let c = ReuleauxPolygon::random(5, 2).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn random_triangle_is_regular() {
        for seed in 0..5 {
            assert!(ReuleauxPolygon::random(3, seed).unwrap().is_triangle());
        }
    }

    #[test]
    fn random_heptagon_has_constant_width() {
        let p = ReuleauxPolygon::random(7, 42).unwrap();
        assert!(validate_constant_width(p.underlying(), 720) < 1e-8);
        assert!((p.underlying().perimeter() - PI).abs() < 1e-9);
    }

    #[test]
    fn arc_centers_are_vertices() {
        let p = ReuleauxPolygon::random(9, 5).unwrap();
        let n = p.order();
        for i in 0..n {
            let c = p.arc_center(i);
            assert!((c.distance(p.vertices()[i]) - 1.0).abs() < 1e-9);
            assert!((c.distance(p.vertices()[(i + 1) % n]) - 1.0).abs() < 1e-9);
            // the disk-polygon view carries the same center
            assert!(p
                .underlying()
                .centers()
                .iter()
                .any(|&q| q.distance(c) < 1e-9));
        }
    }

    #[test]
    fn lens_is_not_constant_width() {
        let lens = build_intersection(&[Point2::ORIGIN, Point2::new(1.0, 0.0)], 1.0).unwrap();
        assert!(validate_constant_width(&lens, 360) > 0.1);
    }
}
