//! Intersections of finitely many equal-radius disks.
//!
//! The boundary of such an intersection is a cyclic sequence of circular
//! arcs, one per contributing disk, meeting at vertices. Extraction works
//! per circle: the part of circle `i` lying inside every other disk is an
//! angular interval, obtained by clipping `[0, 2π)` against one cap per
//! neighbour. Surviving intervals, sorted by their start (outward normal)
//! angle, give the counterclockwise boundary.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{canonical_angle, Point2, EPS_GEO};

/// Arcs shorter than this (radians) are treated as vanished.
/// Largest accepted radius or center coordinate; squares stay finite.
pub const MAX_MAGNITUDE: f64 = 1e100;

pub const ARC_EPS: f64 = 1e-12;

/// A boundary arc, traversed counterclockwise from `start` to `end`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc {
    /// Index into [`DiskPolygon::centers`].
    pub center_index: usize,
    /// Direction from the center to `start`, in `[0, 2π)`.
    pub start_angle: f64,
    /// Arc measure, in `(0, 2π]`.
    pub sweep: f64,
    pub start: Point2,
    pub end: Point2,
}

impl Arc {
    pub fn end_angle(&self) -> f64 {
        self.start_angle + self.sweep
    }
}

/// Vertex `i` joins arc `i - 1` (incoming) to arc `i` (outgoing).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vertex {
    pub position: Point2,
    /// Exterior angle between the incoming and outgoing tangents.
    pub turning_angle: f64,
    pub incident_arcs: (usize, usize),
}

/// `Ω = ⋂ D(cᵢ, r)` together with its boundary decomposition.
///
/// Only contributing disks are kept; `centers` is ordered so that it follows
/// the boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskPolygon {
    centers: Vec<Point2>,
    source_indices: Vec<usize>,
    radius: f64,
    arcs: Vec<Arc>,
    vertices: Vec<Vertex>,
}

/// Wire format: the boundary is always derived, never stored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiskPolygonJson {
    pub radius: f64,
    pub centers: Vec<Point2>,
}

/// Builds the intersection of the disks of radius `radius` centered at
/// `centers`.
pub fn build_intersection(centers: &[Point2], radius: f64) -> Result<DiskPolygon> {
    DiskPolygon::new(centers, radius)
}

/// Intersects the angular interval set `pieces` with the interval
/// `[start, start + len)` (angles mod 2π).
fn clip(pieces: &[(f64, f64)], start: f64, len: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(2);
    for &(s, l) in pieces {
        if l >= TAU {
            out.push((canonical_angle(start), len));
            continue;
        }
        let o = canonical_angle(start - s);
        for shift in [o, o - TAU] {
            let lo = shift.max(0.0);
            let hi = (shift + len).min(l);
            if hi > lo {
                out.push((canonical_angle(s + lo), hi - lo));
            }
        }
    }
    out
}

/// Wraps an angle difference into `(-π, π]`.
fn wrap_pi(a: f64) -> f64 {
    let w = canonical_angle(a);
    if w > PI {
        w - TAU
    } else {
        w
    }
}

impl DiskPolygon {
    pub fn new(centers: &[Point2], radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::InvalidRadius(radius));
        }
        if centers.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        if centers.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("disk center"));
        }
        if radius > MAX_MAGNITUDE
            || centers
                .iter()
                .any(|c| c.x.abs().max(c.y.abs()) > MAX_MAGNITUDE)
        {
            return Err(Error::OutOfRange(format!(
                "coordinates beyond {MAX_MAGNITUDE:e}"
            )));
        }

        // drop duplicates, remembering where each survivor came from
        let mut unique: Vec<(usize, Point2)> = Vec::with_capacity(centers.len());
        for (idx, &c) in centers.iter().enumerate() {
            if unique.iter().all(|&(_, u)| u.distance(c) >= EPS_GEO) {
                unique.push((idx, c));
            }
        }

        if unique.len() == 1 {
            let (src, c) = unique[0];
            let start = c + Point2::new(radius, 0.0);
            return Ok(Self {
                centers: vec![c],
                source_indices: vec![src],
                radius,
                arcs: vec![Arc {
                    center_index: 0,
                    start_angle: 0.0,
                    sweep: TAU,
                    start,
                    end: start,
                }],
                vertices: Vec::new(),
            });
        }

        // (unique index, start angle, sweep)
        let mut raw: Vec<(usize, f64, f64)> = Vec::new();
        for (i, &(_, ci)) in unique.iter().enumerate() {
            let mut pieces = vec![(0.0, TAU)];
            for (j, &(_, cj)) in unique.iter().enumerate() {
                if i == j {
                    continue;
                }
                let d = ci.distance(cj);
                if d > 2.0 * radius + EPS_GEO {
                    return Err(Error::EmptyIntersection);
                }
                if d >= 2.0 * radius - EPS_GEO {
                    return Err(Error::DegenerateIntersection);
                }
                let half = (d / (2.0 * radius)).clamp(-1.0, 1.0).acos();
                let dir = (cj - ci).direction();
                pieces = clip(&pieces, dir - half, 2.0 * half);
                if pieces.is_empty() {
                    break;
                }
            }
            raw.extend(
                pieces
                    .into_iter()
                    .filter(|&(_, l)| l > ARC_EPS)
                    .map(|(s, l)| (i, s, l)),
            );
        }

        if raw.is_empty() {
            return Err(Self::classify_empty(&unique, radius));
        }
        if raw.len() == 1 {
            return Err(Error::DegenerateIntersection);
        }
        raw.sort_by(|a, b| a.1.total_cmp(&b.1));

        let mut order: Vec<usize> = Vec::new();
        for &(i, _, _) in &raw {
            if !order.contains(&i) {
                order.push(i);
            }
        }
        let kept_centers: Vec<Point2> = order.iter().map(|&i| unique[i].1).collect();
        let source_indices: Vec<usize> = order.iter().map(|&i| unique[i].0).collect();

        let arcs: Vec<Arc> = raw
            .iter()
            .map(|&(i, s, l)| {
                let c = unique[i].1;
                Arc {
                    center_index: order.iter().position(|&o| o == i).expect("kept"),
                    start_angle: s,
                    sweep: l,
                    start: c + Point2::unit(s) * radius,
                    end: c + Point2::unit(s + l) * radius,
                }
            })
            .collect();

        let n = arcs.len();
        let vertices = (0..n)
            .map(|k| {
                let prev = &arcs[(k + n - 1) % n];
                let next = &arcs[k];
                let turning = wrap_pi(next.start_angle - prev.end_angle()).max(0.0);
                Vertex {
                    position: prev.end.midpoint(next.start),
                    turning_angle: turning,
                    incident_arcs: ((k + n - 1) % n, k),
                }
            })
            .collect();

        Ok(Self {
            centers: kept_centers,
            source_indices,
            radius,
            arcs,
            vertices,
        })
    }

    fn classify_empty(unique: &[(usize, Point2)], radius: f64) -> Error {
        let inside = |q: Point2| unique.iter().all(|&(_, c)| q.distance(c) <= radius + 1e-9);
        for (a, &(_, ca)) in unique.iter().enumerate() {
            for &(_, cb) in &unique[a + 1..] {
                let d = ca.distance(cb);
                let h = (radius * radius - 0.25 * d * d).max(0.0).sqrt();
                let mid = ca.midpoint(cb);
                let left = (cb - ca).perp() * (h / d);
                if inside(mid + left) || inside(mid - left) {
                    return Error::DegenerateIntersection;
                }
            }
        }
        Error::EmptyIntersection
    }

    /// Contributing disk centers, in boundary order.
    pub fn centers(&self) -> &[Point2] {
        &self.centers
    }

    /// For each kept center, its index in the list passed to the constructor.
    pub fn source_indices(&self) -> &[usize] {
        &self.source_indices
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_full_circle(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Arc measures θᵢ in boundary order.
    pub fn thetas(&self) -> Vec<f64> {
        self.arcs.iter().map(|a| a.sweep).collect()
    }

    /// Turning angles βᵢ; `betas()[i]` sits at the start of arc `i`.
    pub fn betas(&self) -> Vec<f64> {
        self.vertices.iter().map(|v| v.turning_angle).collect()
    }

    /// Σ(θᵢ + βᵢ); equals 2π for any valid boundary.
    pub fn angle_sum(&self) -> f64 {
        self.arcs.iter().map(|a| a.sweep).sum::<f64>()
            + self.vertices.iter().map(|v| v.turning_angle).sum::<f64>()
    }

    /// Shoelace area of the vertex polygon plus one circular segment per arc.
    pub fn area(&self) -> f64 {
        let r = self.radius;
        if self.is_full_circle() {
            return PI * r * r;
        }
        let n = self.vertices.len();
        let polygon: f64 = (0..n)
            .map(|i| {
                self.vertices[i]
                    .position
                    .cross(self.vertices[(i + 1) % n].position)
            })
            .sum::<f64>()
            * 0.5;
        let segments: f64 = self
            .arcs
            .iter()
            .map(|a| 0.5 * r * r * (a.sweep - a.sweep.sin()))
            .sum();
        polygon + segments
    }

    pub fn perimeter(&self) -> f64 {
        self.radius * self.arcs.iter().map(|a| a.sweep).sum::<f64>()
    }

    /// Boundary-inclusive membership test.
    pub fn contains_point(&self, q: Point2) -> bool {
        self.centers
            .iter()
            .all(|&c| q.distance(c) <= self.radius + EPS_GEO)
    }

    /// Support function `max_{p ∈ Ω} ⟨p, u(φ)⟩`.
    pub fn support(&self, phi: f64) -> f64 {
        let u = Point2::unit(phi);
        let mut best = self
            .vertices
            .iter()
            .map(|v| v.position.dot(u))
            .fold(f64::NEG_INFINITY, f64::max);
        for arc in &self.arcs {
            if canonical_angle(phi - arc.start_angle) <= arc.sweep {
                let c = self.centers[arc.center_index];
                best = best.max(c.dot(u) + self.radius);
            }
        }
        best
    }

    /// Distance between the two supporting lines orthogonal to `phi`.
    pub fn width(&self, phi: f64) -> f64 {
        self.support(phi) + self.support(phi + PI)
    }

    pub fn to_json(&self) -> DiskPolygonJson {
        DiskPolygonJson {
            radius: self.radius,
            centers: self.centers.clone(),
        }
    }
}

impl TryFrom<DiskPolygonJson> for DiskPolygon {
    type Error = Error;

    fn try_from(value: DiskPolygonJson) -> Result<Self> {
        DiskPolygon::new(&value.centers, value.radius)
    }
}

impl Serialize for DiskPolygon {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DiskPolygon {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = DiskPolygonJson::deserialize(deserializer)?;
        DiskPolygon::try_from(raw).map_err(serde::de::Error::custom)
    }
}

/// Parses the `{"radius": r, "centers": [[x, y], ...]}` format.
pub fn parse_disk_polygon_json(text: &str) -> Result<DiskPolygon> {
    let raw: DiskPolygonJson =
        serde_json::from_str(text).map_err(|e| Error::InvalidShapeSpec(e.to_string()))?;
    DiskPolygon::try_from(raw)
}
