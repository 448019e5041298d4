//! Planar primitives: points, angle canonicalization, circle–circle
//! intersection and the minimal enclosing circle.
//!
//! All shapes handled by this crate have unit width, so a single absolute
//! tolerance [`EPS_GEO`] is used for coincidence and tangency decisions.

use std::f64::consts::TAU;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance (width units) for coincidence/tangency classification.
pub const EPS_GEO: f64 = 1e-10;

/// A point (or vector) in the plane, in width units.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Unit vector pointing in direction `angle`.
    #[inline]
    pub fn unit(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self { x: c, y: s }
    }

    #[inline]
    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    #[inline]
    pub fn cross(self, other: Self) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(self, other: Self) -> f64 {
        (self - other).norm()
    }

    /// Direction of the vector in `[0, 2π)`.
    #[inline]
    pub fn direction(self) -> f64 {
        canonical_angle(self.y.atan2(self.x))
    }

    /// Counterclockwise rotation by a quarter turn.
    #[inline]
    pub fn perp(self) -> Self {
        Self {
            x: -self.y,
            y: self.x,
        }
    }

    pub fn rotate(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self {
            x: c * self.x - s * self.y,
            y: s * self.x + c * self.y,
        }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn midpoint(self, other: Self) -> Self {
        Self::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }
}

impl Add for Point2 {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Self;
    #[inline]
    fn mul(self, s: f64) -> Self {
        Self::new(self.x * s, self.y * s)
    }
}

impl Neg for Point2 {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl From<[f64; 2]> for Point2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Self { x, y }
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> Self {
        [p.x, p.y]
    }
}

/// Maps an angle to `[0, 2π)`. Idempotent.
pub fn canonical_angle(angle: f64) -> f64 {
    let a = angle.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if a >= TAU {
        0.0
    } else {
        a
    }
}

/// Points at distance `r` from both `c1` and `c2`.
///
/// With two solutions, the first lies to the left of the directed segment
/// `c1 → c2`. Tangency (within [`EPS_GEO`]) yields the single midpoint.
pub fn circle_circle_intersection(c1: Point2, c2: Point2, r: f64) -> Result<Vec<Point2>> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::InvalidRadius(r));
    }
    if !c1.is_finite() || !c2.is_finite() {
        return Err(Error::NonFinite("circle center"));
    }
    let delta = c2 - c1;
    let d = delta.norm();
    if d < EPS_GEO {
        return Err(Error::DegenerateCenters);
    }
    let mid = c1.midpoint(c2);
    if (d - 2.0 * r).abs() <= EPS_GEO {
        return Ok(vec![mid]);
    }
    if d > 2.0 * r {
        return Ok(Vec::new());
    }
    let h = (r * r - 0.25 * d * d).max(0.0).sqrt();
    let left = delta.perp() * (h / d);
    Ok(vec![mid + left, mid - left])
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point2,
    pub radius: f64,
}

impl Circle {
    fn contains(&self, p: Point2) -> bool {
        p.distance(self.center) <= self.radius * (1.0 + 1e-12) + 1e-14
    }

    fn from_diameter(a: Point2, b: Point2) -> Self {
        let center = a.midpoint(b);
        Self {
            center,
            radius: center.distance(a).max(center.distance(b)),
        }
    }

    /// Circle through three points; falls back to the widest diameter circle
    /// when the points are (nearly) collinear.
    fn through(a: Point2, b: Point2, c: Point2) -> Self {
        let ab = b - a;
        let ac = c - a;
        let det = 2.0 * ab.cross(ac);
        let scale = ab.norm().max(ac.norm()).max((c - b).norm());
        if det.abs() <= 1e-14 * scale * scale {
            let candidates = [
                Self::from_diameter(a, b),
                Self::from_diameter(a, c),
                Self::from_diameter(b, c),
            ];
            return candidates
                .into_iter()
                .max_by(|x, y| x.radius.total_cmp(&y.radius))
                .expect("three candidates");
        }
        let ab2 = ab.dot(ab);
        let ac2 = ac.dot(ac);
        let ux = (ac.y * ab2 - ab.y * ac2) / det;
        let uy = (ab.x * ac2 - ac.x * ab2) / det;
        let center = a + Point2::new(ux, uy);
        let radius = center
            .distance(a)
            .max(center.distance(b))
            .max(center.distance(c));
        Self { center, radius }
    }
}

/// Smallest circle containing every point.
///
/// Incremental boundary-point algorithm processed in input order (no
/// shuffling), so the result is deterministic for a fixed input.
pub fn min_enclosing_circle(points: &[Point2]) -> Result<Circle> {
    let first = *points.first().ok_or(Error::EmptyPointSet)?;
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite("point"));
    }
    let mut circle = Circle {
        center: first,
        radius: 0.0,
    };
    for i in 1..points.len() {
        let pi = points[i];
        if circle.contains(pi) {
            continue;
        }
        circle = Circle {
            center: pi,
            radius: 0.0,
        };
        for j in 0..i {
            let pj = points[j];
            if circle.contains(pj) {
                continue;
            }
            circle = Circle::from_diameter(pi, pj);
            for &pk in &points[..j] {
                if !circle.contains(pk) {
                    circle = Circle::through(pi, pj, pk);
                }
            }
        }
    }
    Ok(circle)
}
