//! Inner parallel sets `Ω₋ₜ = {x ∈ Ω : d(x, ∂Ω) ≥ t}` of disk-polygons.
//!
//! For `Ω = ⋂ D(cᵢ, r)` the inner parallel set at depth `t` is the
//! intersection of the same disks shrunk to radius `r − t`. As `t` grows,
//! arcs shrink and eventually vanish; the depths where that happens are the
//! breakpoints of a [`ParallelProfile`]. Between breakpoints the perimeter
//! has a closed form built from the functions of [`ConvexityLemmaParams`].

use std::f64::consts::{FRAC_PI_3, FRAC_PI_6};

use serde::{Deserialize, Serialize};

use crate::disk_polygon::{build_intersection, DiskPolygon};
use crate::error::{Error, Result};
use crate::geometry::{min_enclosing_circle, Point2};

/// Inradius of the width-1 Reuleaux triangle, `1 − √3/3`.
pub fn reuleaux_triangle_inradius() -> f64 {
    1.0 - 3f64.sqrt() / 3.0
}

/// Breakpoints are located to this precision in `t`.
pub const BREAKPOINT_TOL: f64 = 1e-12;

/// The profile search stops this far short of the inradius.
pub const PROFILE_END_SLACK: f64 = 1e-9;

/// Depths this close to the inradius are treated as the incenter.
pub const INCENTER_SLACK: f64 = 1e-8;

const DOMAIN_SLACK: f64 = 1e-12;

/// Depth `t` and half turning angle `γ` for the triangle `ABC(γ)` with
/// `AB = 1`, `BC = 1 − t`, `∠BAC = γ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvexityLemmaParams {
    t: f64,
    gamma: f64,
}

impl ConvexityLemmaParams {
    /// `t ∈ [0, 1 − √3/3]`, `γ ∈ [0, π/6]`.
    pub fn new(t: f64, gamma: f64) -> Result<Self> {
        let t_max = reuleaux_triangle_inradius();
        if !(t >= -DOMAIN_SLACK && t <= t_max + DOMAIN_SLACK) {
            return Err(Error::OutOfRange(format!("t = {t} outside [0, {t_max}]")));
        }
        if !(-DOMAIN_SLACK..=FRAC_PI_6 + DOMAIN_SLACK).contains(&gamma) {
            return Err(Error::OutOfRange(format!(
                "gamma = {gamma} outside [0, pi/6]"
            )));
        }
        Ok(Self {
            t: t.clamp(0.0, t_max),
            gamma: gamma.clamp(0.0, FRAC_PI_6),
        })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// `AC(γ) = cos γ − √((1 − t)² − sin² γ)`.
///
/// Evaluated as `t(2 − t) / (cos γ + √((1 − t)² − sin² γ))`, which is the
/// same quantity without the cancellation near `t = 0`.
pub fn chord_length(p: ConvexityLemmaParams) -> f64 {
    let (s, c) = p.gamma.sin_cos();
    let rho = 1.0 - p.t;
    p.t * (2.0 - p.t) / (c + (rho * rho - s * s).max(0.0).sqrt())
}

/// `h(γ) = AC(γ) sin γ`, the height of `ABC(γ)` from `C`.
pub fn height(p: ConvexityLemmaParams) -> f64 {
    chord_length(p) * p.gamma.sin()
}

/// `α_t(γ) = arcsin(h(γ) / (1 − t))`, the angle `∠CBA`.
pub fn alpha(p: ConvexityLemmaParams) -> f64 {
    (height(p) / (1.0 - p.t)).clamp(-1.0, 1.0).asin()
}

/// `α_t(γ)` with the domain check folded in.
pub fn alpha_at(t: f64, gamma: f64) -> Result<f64> {
    Ok(alpha(ConvexityLemmaParams::new(t, gamma)?))
}

/// Inradius `r − R`, where `R` is the enclosing radius of the centers.
pub fn inradius(p: &DiskPolygon) -> f64 {
    let enclosing = min_enclosing_circle(p.centers()).expect("disk-polygons have centers");
    p.radius() - enclosing.radius
}

/// Center of the inscribed disk.
pub fn incenter(p: &DiskPolygon) -> Point2 {
    min_enclosing_circle(p.centers())
        .expect("disk-polygons have centers")
        .center
}

/// `Ω₋ₜ`, built as the intersection of the same disks at radius `r − t`.
///
/// The result's `source_indices` refer to positions in `p.centers()`.
pub fn inner_set(p: &DiskPolygon, t: f64) -> Result<DiskPolygon> {
    if t < 0.0 {
        return Err(Error::NegativeDepth(t));
    }
    let r_in = inradius(p);
    if !(t < r_in) {
        return Err(Error::DepthExceedsInradius { t, inradius: r_in });
    }
    build_intersection(p.centers(), p.radius() - t)
}

/// Perimeter, area and arc count of `Ω₋ₜ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InnerMeasures {
    pub t: f64,
    pub perimeter: f64,
    pub area: f64,
    pub arc_count: usize,
}

/// Like [`inner_set`], but depths at (or numerically at) the inradius give
/// the degenerate set `{incenter}` with zero perimeter and area.
pub fn inner_measures(p: &DiskPolygon, t: f64) -> Result<InnerMeasures> {
    if t < 0.0 {
        return Err(Error::NegativeDepth(t));
    }
    let r_in = inradius(p);
    let zero = InnerMeasures {
        t,
        perimeter: 0.0,
        area: 0.0,
        arc_count: 0,
    };
    if t >= r_in {
        return Ok(zero);
    }
    match build_intersection(p.centers(), p.radius() - t) {
        Ok(q) => Ok(InnerMeasures {
            t,
            perimeter: q.perimeter(),
            area: q.area(),
            arc_count: q.arc_count(),
        }),
        Err(Error::DegenerateIntersection | Error::EmptyIntersection)
            if t > r_in - INCENTER_SLACK =>
        {
            Ok(zero)
        }
        Err(e) => Err(e),
    }
}

/// Piecewise structure of `t ↦ Ω₋ₜ`.
///
/// `stages[j]` lists the contributing disks (indices into the outer
/// polygon's `centers()`) for `t ∈ [breakpoints[j−1], breakpoints[j]]`, with
/// `stages[0]` covering `[0, breakpoints[0]]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParallelProfile {
    pub breakpoints: Vec<f64>,
    pub stages: Vec<Vec<usize>>,
    pub inradius: f64,
}

impl ParallelProfile {
    /// Contributing disks at depth `t`.
    pub fn stage_at(&self, t: f64) -> &[usize] {
        let j = self.breakpoints.iter().take_while(|&&b| b <= t).count();
        &self.stages[j]
    }

    /// First breakpoint, or the inradius when there is none.
    pub fn first_breakpoint(&self) -> f64 {
        self.breakpoints.first().copied().unwrap_or(self.inradius)
    }

    /// Distance from `t` to the nearest breakpoint (infinite if none).
    pub fn distance_to_breakpoint(&self, t: f64) -> f64 {
        self.breakpoints
            .iter()
            .map(|b| (b - t).abs())
            .fold(f64::INFINITY, f64::min)
    }
}

fn survivors(p: &DiskPolygon, t: f64) -> Result<Vec<usize>> {
    let q = build_intersection(p.centers(), p.radius() - t)?;
    let mut s = q.source_indices().to_vec();
    s.sort_unstable();
    Ok(s)
}

/// Locates every depth in `(0, inradius)` where arcs of `Ω₋ₜ` vanish.
///
/// Contributing sets only shrink as `t` grows, so equal sets at both ends of
/// an interval rule out any change inside it; intervals with a change are
/// bisected down to [`BREAKPOINT_TOL`]. Arcs vanishing together are removed
/// in a single stage.
pub fn profile(p: &DiskPolygon) -> Result<ParallelProfile> {
    let r_in = inradius(p);
    let all: Vec<usize> = (0..p.centers().len()).collect();
    let t_end = r_in - PROFILE_END_SLACK;
    let mut events: Vec<(f64, Vec<usize>)> = Vec::new();
    if t_end > 0.0 {
        let start = survivors(p, 0.0)?;
        let end = survivors(p, t_end)?;
        locate(p, 0.0, &start, t_end, &end, &mut events)?;
    }

    let mut breakpoints: Vec<f64> = Vec::new();
    let mut stages = vec![all];
    for (t, set) in events {
        if let Some(&last) = breakpoints.last() {
            if t - last < 10.0 * BREAKPOINT_TOL {
                *stages.last_mut().expect("stage per breakpoint") = set;
                continue;
            }
        }
        breakpoints.push(t);
        stages.push(set);
    }
    Ok(ParallelProfile {
        breakpoints,
        stages,
        inradius: r_in,
    })
}

fn locate(
    p: &DiskPolygon,
    lo: f64,
    lo_set: &[usize],
    hi: f64,
    hi_set: &[usize],
    out: &mut Vec<(f64, Vec<usize>)>,
) -> Result<()> {
    if lo_set == hi_set {
        return Ok(());
    }
    if hi - lo <= BREAKPOINT_TOL {
        out.push((0.5 * (lo + hi), hi_set.to_vec()));
        return Ok(());
    }
    let mid = 0.5 * (lo + hi);
    let mid_set = survivors(p, mid)?;
    locate(p, lo, lo_set, mid, &mid_set, out)?;
    locate(p, mid, &mid_set, hi, hi_set, out)
}

fn check_lists(thetas: &[f64], betas: &[f64]) -> Result<()> {
    if thetas.len() != betas.len() {
        return Err(Error::OutOfRange(format!(
            "{} arc measures but {} turning angles",
            thetas.len(),
            betas.len()
        )));
    }
    for (index, &value) in betas.iter().enumerate() {
        if !(-1e-9..=FRAC_PI_3 + 1e-9).contains(&value) {
            return Err(Error::TurningAngleRange { index, value });
        }
    }
    Ok(())
}

/// Sweep of each arc of `Ω₋ₜ` while no two adjacent bisectors have met:
/// `θᵢ − α_t(βᵢ/2) − α_t(βᵢ₊₁/2)`, where `βᵢ` sits at the start of arc `i`.
pub fn regular_arc_sweeps(thetas: &[f64], betas: &[f64], t: f64) -> Result<Vec<f64>> {
    check_lists(thetas, betas)?;
    let n = thetas.len();
    let half: Vec<f64> = betas
        .iter()
        .map(|&b| alpha_at(t, 0.5 * b))
        .collect::<Result<_>>()?;
    Ok((0..n)
        .map(|i| thetas[i] - half[i] - half[(i + 1) % n])
        .collect())
}

/// `(1 − t)(Σθᵢ − 2 Σ α_t(βᵢ/2))`, the perimeter of `Ω₋ₜ` for a radius-1
/// disk-polygon before any of its arcs vanish.
pub fn regular_inner_perimeter(thetas: &[f64], betas: &[f64], t: f64) -> Result<f64> {
    check_lists(thetas, betas)?;
    let theta_sum: f64 = thetas.iter().sum();
    let alpha_sum = betas
        .iter()
        .map(|&b| alpha_at(t, 0.5 * b))
        .sum::<Result<f64>>()?;
    Ok((1.0 - t) * (theta_sum - 2.0 * alpha_sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reuleaux::ReuleauxPolygon;
    use std::f64::consts::PI;

    fn params(t: f64, g: f64) -> ConvexityLemmaParams {
        ConvexityLemmaParams::new(t, g).unwrap()
    }

    /// Nearest intersection of the ray at angle γ from A = (0,0) with the
    /// circle of radius 1 − t about B = (1,0), via the quadratic formula.
    fn ray_circle(t: f64, g: f64) -> Point2 {
        let d = Point2::unit(g);
        let b = Point2::new(1.0, 0.0);
        // |s d − B|² = (1−t)²  →  s² − 2 s ⟨d,B⟩ + 1 − (1−t)² = 0
        let half_b = d.dot(b);
        let c = 1.0 - (1.0 - t) * (1.0 - t);
        let s = half_b - (half_b * half_b - c).sqrt();
        d * s
    }

    #[test]
    fn chord_length_values() {
        assert!((chord_length(params(0.2, 0.0)) - 0.2).abs() < 1e-15);
        let corner = params(reuleaux_triangle_inradius(), FRAC_PI_6);
        let expected = 3f64.sqrt() / 2.0 - (1.0f64 / 12.0).sqrt();
        assert!((chord_length(corner) - expected).abs() < 1e-12);
        assert!((expected - 0.5773503).abs() < 1e-7);
        let g = PI / 12.0;
        let c = ray_circle(0.1, g);
        assert!((chord_length(params(0.1, g)) - c.norm()).abs() < 1e-12);
    }

    #[test]
    fn height_values() {
        assert_eq!(height(params(0.3, 0.0)), 0.0);
        let p = params(0.1, FRAC_PI_6);
        assert!((height(p) - 0.5 * chord_length(p)).abs() < 1e-15);
    }

    #[test]
    fn alpha_matches_triangle_construction() {
        assert_eq!(alpha(params(0.2, 0.0)), 0.0);
        for g in [0.0, 0.1, 0.3, FRAC_PI_6] {
            assert!(alpha(params(0.0, g)).abs() < 1e-15);
        }
        let (t, g) = (0.2, FRAC_PI_6);
        let c = ray_circle(t, g);
        let b = Point2::new(1.0, 0.0);
        let ba = Point2::ORIGIN - b;
        let bc = c - b;
        let angle = ba.cross(bc).abs().atan2(ba.dot(bc));
        assert!((alpha(params(t, g)) - angle).abs() < 1e-12);
    }

    #[test]
    fn domain_is_checked() {
        assert!(ConvexityLemmaParams::new(0.5, 0.1).is_err());
        assert!(ConvexityLemmaParams::new(0.1, 0.6).is_err());
        assert!(ConvexityLemmaParams::new(-0.1, 0.1).is_err());
        assert!(ConvexityLemmaParams::new(f64::NAN, 0.1).is_err());
    }

    #[test]
    fn inradius_of_triangle_and_disk() {
        let r = ReuleauxPolygon::triangle();
        assert!((inradius(r.underlying()) - reuleaux_triangle_inradius()).abs() < 1e-14);
        let disk = build_intersection(&[Point2::ORIGIN], 1.0).unwrap();
        assert_eq!(inradius(&disk), 1.0);
    }

    #[test]
    fn inner_set_errors_and_identity() {
        let r = ReuleauxPolygon::triangle();
        let p = r.underlying();
        assert_eq!(inner_set(p, -0.1).unwrap_err(), Error::NegativeDepth(-0.1));
        assert!(matches!(
            inner_set(p, 0.5),
            Err(Error::DepthExceedsInradius { .. })
        ));
        let same = inner_set(p, 0.0).unwrap();
        for (a, b) in same.arcs().iter().zip(p.arcs()) {
            assert!((a.start_angle - b.start_angle).abs() < 1e-12);
            assert!((a.sweep - b.sweep).abs() < 1e-12);
        }
    }

    #[test]
    fn triangle_inner_perimeter_formula() {
        let r = ReuleauxPolygon::triangle();
        for t in [0.2, 0.3] {
            let inner = inner_set(r.underlying(), t).unwrap();
            assert_eq!(inner.arc_count(), 3);
            let formula = (1.0 - t) * (PI - 6.0 * alpha(params(t, FRAC_PI_6)));
            assert!((inner.perimeter() - formula).abs() < 1e-12);
            let general = regular_inner_perimeter(&[PI / 3.0; 3], &[PI / 3.0; 3], t).unwrap();
            assert!((general - formula).abs() < 1e-14);
        }
    }

    #[test]
    fn regular_perimeter_at_zero_depth() {
        let p = ReuleauxPolygon::random(7, 3).unwrap();
        let d = p.underlying();
        let v = regular_inner_perimeter(&d.thetas(), &d.betas(), 0.0).unwrap();
        assert!((v - PI).abs() < 1e-12);
    }

    #[test]
    fn regular_perimeter_rejects_wide_turns() {
        let err = regular_inner_perimeter(&[1.0, 1.0], &[1.2, 0.5], 0.1).unwrap_err();
        assert!(matches!(err, Error::TurningAngleRange { index: 0, .. }));
        assert!(regular_inner_perimeter(&[1.0], &[0.1, 0.2], 0.1).is_err());
    }

    #[test]
    fn regular_polygons_have_no_breakpoints() {
        for n in [3, 5, 7, 9] {
            let p = ReuleauxPolygon::regular(n).unwrap();
            let prof = profile(p.underlying()).unwrap();
            assert!(
                prof.breakpoints.is_empty(),
                "n = {n}: {:?}",
                prof.breakpoints
            );
            assert_eq!(prof.stages.len(), 1);
        }
        let prof = profile(ReuleauxPolygon::triangle().underlying()).unwrap();
        assert!((prof.inradius - reuleaux_triangle_inradius()).abs() < 1e-14);
    }

    #[test]
    fn irregular_profile_nests() {
        let p = ReuleauxPolygon::random(7, 7).unwrap();
        let d = p.underlying();
        let prof = profile(d).unwrap();
        assert!(!prof.breakpoints.is_empty());
        for w in prof.breakpoints.windows(2) {
            assert!(w[0] < w[1]);
        }
        for w in prof.stages.windows(2) {
            assert!(w[1].len() < w[0].len());
            assert!(w[1].iter().all(|i| w[0].contains(i)));
        }
        // arc counts across the first breakpoint
        let b = prof.breakpoints[0];
        let before = inner_set(d, b - 1e-6).unwrap().arc_count();
        let after = inner_set(d, b + 1e-6).unwrap().arc_count();
        assert!(after < before);
    }

    #[test]
    fn measures_at_incenter_are_zero() {
        let r = ReuleauxPolygon::triangle();
        let m = inner_measures(r.underlying(), reuleaux_triangle_inradius()).unwrap();
        assert_eq!(m.area, 0.0);
        assert_eq!(m.arc_count, 0);
    }
}
