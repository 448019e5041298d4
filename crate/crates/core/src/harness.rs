//! Numerical campaigns comparing random Reuleaux polygons against the
//! Reuleaux triangle `R`.
//!
//! * perimeter: `|∂Ω₋ₜ| ≥ |∂R₋ₜ|` on a depth grid, with equality at
//!   positive depth only for `R`;
//! * area: `|Ω₋ₜ| ≥ |R₋ₜ|`, the difference non-increasing in `t`, and
//!   `A'(t) = −P(t)` checked by central differences;
//! * cheeger: `h(Ω) ≤ h(R)`, plus the analytic value `h = 4` of the disk;
//! * maxsumf: the budgeted problem `max Σ f(βᵢ)`, `f(β) = 2α_t(β/2)`.
//!
//! Failures are collected in the report, never returned as errors.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_6, PI};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cheeger::cheeger;
use crate::disk_polygon::{build_intersection, DiskPolygon};
use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::inner_parallel::{
    alpha_at, inner_measures, inradius, profile, reuleaux_triangle_inradius,
};
use crate::reuleaux::{ReuleauxPolygon, ANGLE_TOL};

pub const REPORT_SCHEMA: &str = "cwidth.report/1";

/// Step of the central difference used for `A'(t)`.
pub const DERIVATIVE_STEP: f64 = 1e-4;
/// Allowed `|ΔA/Δt + P|`.
pub const DERIVATIVE_TOL: f64 = 1e-5;
/// Derivative probes stay this far from breakpoints.
pub const BREAKPOINT_CLEARANCE: f64 = 1e-3;
pub const DERIVATIVE_DEPTHS: usize = 10;
/// Required accuracy of the disk's Cheeger constant.
pub const DISK_CHEEGER_TOL: f64 = 1e-10;

/// Depths used by the maxsumf campaign; the last is `1 − √3/3`.
pub const MAXSUMF_DEPTHS: [f64; 4] = [0.05, 0.2, 0.4, 0.42264973081037427];
pub const MAXSUMF_EPSILONS: [f64; 3] = [0.0, FRAC_PI_6, FRAC_PI_3];
pub const MAXSUMF_COUNTS: [usize; 4] = [3, 4, 5, 7];
pub const MAXSUMF_RANDOM_POINTS: usize = 1000;
pub const MAXSUMF_ASCENT_STARTS: usize = 20;
const MAXSUMF_VALUE_TOL: f64 = 1e-12;
const MAXSUMF_ASCENT_TOL: f64 = 1e-9;
const INTERIOR_TOL: f64 = 1e-7;

pub const MAX_CAMPAIGN_SIZE: usize = 1_000_000;
pub const MAX_CAMPAIGN_ORDER: usize = 1001;
pub const MAX_WORKERS: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CampaignConfig {
    pub shape_count: usize,
    pub max_order: usize,
    pub t_grid_size: usize,
    pub seed: u64,
    pub tolerance: f64,
    /// Worker threads; 1 keeps everything on the calling thread.
    pub workers: usize,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self {
            shape_count: 200,
            max_order: 11,
            t_grid_size: 64,
            seed: 1,
            tolerance: 1e-9,
            workers: 1,
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        if self.shape_count == 0 {
            return Err(Error::InvalidConfig("shape_count must be positive".into()));
        }
        if self.max_order < 3 || self.max_order.is_multiple_of(2) {
            return Err(Error::InvalidConfig(format!(
                "max_order must be odd and at least 3, got {}",
                self.max_order
            )));
        }
        if self.t_grid_size < 2 {
            return Err(Error::InvalidConfig(
                "t_grid_size must be at least 2".into(),
            ));
        }
        if !(self.tolerance > 0.0) || !self.tolerance.is_finite() {
            return Err(Error::InvalidConfig("tolerance must be positive".into()));
        }
        if self.workers == 0 {
            return Err(Error::InvalidConfig("workers must be positive".into()));
        }
        if self.shape_count > MAX_CAMPAIGN_SIZE
            || self.t_grid_size > MAX_CAMPAIGN_SIZE
            || self.max_order > MAX_CAMPAIGN_ORDER
            || self.workers > MAX_WORKERS
        {
            return Err(Error::InvalidConfig(format!(
                "limits: shape_count, t_grid_size <= {MAX_CAMPAIGN_SIZE}, max_order <= {MAX_CAMPAIGN_ORDER}, workers <= {MAX_WORKERS}"
            )));
        }
        Ok(())
    }

    /// Depth grid on `[0, 1 − √3/3]`.
    pub fn depth_grid(&self) -> Vec<f64> {
        let t_max = reuleaux_triangle_inradius();
        let m = self.t_grid_size;
        (0..m)
            .map(|j| {
                if j + 1 == m {
                    t_max
                } else {
                    t_max * j as f64 / (m - 1) as f64
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Campaign {
    Perim,
    Area,
    Cheeger,
    Maxsumf,
}

impl FromStr for Campaign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "perim" | "perimeter" => Ok(Self::Perim),
            "area" => Ok(Self::Area),
            "cheeger" => Ok(Self::Cheeger),
            "maxsumf" => Ok(Self::Maxsumf),
            other => Err(Error::InvalidConfig(format!("unknown campaign '{other}'"))),
        }
    }
}

impl fmt::Display for Campaign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Perim => "perim",
            Self::Area => "area",
            Self::Cheeger => "cheeger",
            Self::Maxsumf => "maxsumf",
        })
    }
}

/// A campaign input: a width-1 shape plus bookkeeping.
#[derive(Debug, Clone)]
pub struct TestShape {
    pub label: String,
    pub angles: Vec<f64>,
    pub polygon: DiskPolygon,
    /// Numerically the Reuleaux triangle.
    pub is_reference: bool,
}

impl TestShape {
    pub fn from_reuleaux(label: impl Into<String>, shape: &ReuleauxPolygon) -> Self {
        Self {
            label: label.into(),
            angles: shape.angles().values().to_vec(),
            polygon: shape.underlying().clone(),
            is_reference: shape.is_triangle(),
        }
    }

    /// Any disk-polygon; it is the reference only if it has three arcs of
    /// measure π/3 on unit disks.
    pub fn from_polygon(label: impl Into<String>, polygon: DiskPolygon) -> Self {
        let is_reference = polygon.radius() == 1.0
            && polygon.arc_count() == 3
            && polygon
                .thetas()
                .iter()
                .all(|&a| (a - FRAC_PI_3).abs() <= ANGLE_TOL);
        Self {
            label: label.into(),
            angles: polygon.thetas(),
            polygon,
            is_reference,
        }
    }
}

/// `cfg.shape_count` random Reuleaux polygons cycling through the odd
/// orders `3, 5, …, max_order`; shape `i` uses seed `cfg.seed + i`.
pub fn ensemble(cfg: &CampaignConfig) -> Result<Vec<TestShape>> {
    cfg.validate()?;
    let orders: Vec<usize> = (3..=cfg.max_order).step_by(2).collect();
    (0..cfg.shape_count)
        .map(|i| {
            let n = orders[i % orders.len()];
            let seed = cfg.seed.wrapping_add(i as u64);
            let shape = ReuleauxPolygon::random(n, seed)?;
            Ok(TestShape::from_reuleaux(
                format!("random({n}, {seed})"),
                &shape,
            ))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShapeMargin {
    pub label: String,
    pub order: usize,
    pub is_reference: bool,
    /// Smallest margin over the depth grid.
    pub worst_margin: f64,
    pub worst_t: Option<f64>,
    /// Smallest margin over positive depths (perimeter campaign).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub positive_depth_margin: Option<f64>,
    /// Largest `|ΔA/Δt + P|` (area campaign).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivative_error: Option<f64>,
    /// The value compared against the reference (Cheeger campaign: `h(Ω)`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub label: String,
    pub angles: Vec<f64>,
    pub t: Option<f64>,
    pub margin: f64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaxSumCase {
    pub t: f64,
    pub epsilon: f64,
    pub count: usize,
    pub maximizer: Vec<f64>,
    pub value: f64,
    pub interior_components: usize,
    pub random_best: f64,
    pub ascent_best: f64,
    pub ascent_interior_components: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub schema: String,
    pub campaign: Campaign,
    pub tolerance: f64,
    pub shapes: Vec<ShapeMargin>,
    pub worst_margin: f64,
    pub pass: bool,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivative_max_error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference_h: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disk_h: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_h: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub maxsumf_cases: Vec<MaxSumCase>,
}

impl CampaignReport {
    fn new(campaign: Campaign, tolerance: f64) -> Self {
        Self {
            schema: REPORT_SCHEMA.to_string(),
            campaign,
            tolerance,
            shapes: Vec::new(),
            worst_margin: f64::INFINITY,
            pass: true,
            counterexamples: Vec::new(),
            derivative_max_error: None,
            reference_h: None,
            disk_h: None,
            max_h: None,
            maxsumf_cases: Vec::new(),
        }
    }

    fn absorb(&mut self, shape: &TestShape, margin: ShapeMargin) {
        self.worst_margin = self.worst_margin.min(margin.worst_margin);
        if let Some(e) = margin.derivative_error {
            let prev = self.derivative_max_error.unwrap_or(0.0);
            self.derivative_max_error = Some(prev.max(e));
        }
        if !margin.pass {
            self.pass = false;
            self.counterexamples.push(Counterexample {
                label: margin.label.clone(),
                angles: shape.angles.clone(),
                t: margin.worst_t,
                margin: margin.worst_margin,
                reason: margin.failures.join("; "),
            });
        }
        self.shapes.push(margin);
    }
}

/// Maps `f` over `items` on `workers` threads; output order matches input.
fn par_map<T: Sync, R: Send>(items: &[T], workers: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    if workers <= 1 || items.len() <= 1 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    let f = &f;
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(f).collect::<Vec<R>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("campaign worker panicked"))
            .collect()
    })
}

fn blank_margin(shape: &TestShape) -> ShapeMargin {
    ShapeMargin {
        label: shape.label.clone(),
        order: shape.polygon.arc_count(),
        is_reference: shape.is_reference,
        worst_margin: f64::INFINITY,
        worst_t: None,
        positive_depth_margin: None,
        derivative_error: None,
        value: None,
        pass: true,
        failures: Vec::new(),
    }
}

fn fail(m: &mut ShapeMargin, why: String) {
    m.pass = false;
    m.failures.push(why);
}

/// Evaluates `measure` of the shape and of `R` on the grid; returns the
/// per-depth margins `measure(Ω) − measure(R)`.
fn grid_margins(
    shape: &TestShape,
    grid: &[f64],
    reference: &[f64],
    measure: impl Fn(&DiskPolygon, f64) -> Result<f64>,
) -> Result<Vec<f64>> {
    grid.iter()
        .zip(reference)
        .map(|(&t, &r)| Ok(measure(&shape.polygon, t)? - r))
        .collect()
}

fn perimeter_at(p: &DiskPolygon, t: f64) -> Result<f64> {
    Ok(inner_measures(p, t)?.perimeter)
}

fn area_at(p: &DiskPolygon, t: f64) -> Result<f64> {
    Ok(inner_measures(p, t)?.area)
}

fn record_worst(m: &mut ShapeMargin, grid: &[f64], margins: &[f64]) {
    for (&t, &v) in grid.iter().zip(margins) {
        if v < m.worst_margin {
            m.worst_margin = v;
            m.worst_t = Some(t);
        }
    }
}

pub fn verify_perimeter_extremality(cfg: &CampaignConfig) -> Result<CampaignReport> {
    verify_perimeter_on(&ensemble(cfg)?, cfg)
}

pub fn verify_perimeter_on(shapes: &[TestShape], cfg: &CampaignConfig) -> Result<CampaignReport> {
    cfg.validate()?;
    let grid = cfg.depth_grid();
    let triangle = ReuleauxPolygon::triangle();
    let reference: Vec<f64> = grid
        .iter()
        .map(|&t| perimeter_at(triangle.underlying(), t))
        .collect::<Result<_>>()?;
    let tol = cfg.tolerance;

    let results = par_map(shapes, cfg.workers, |shape| -> Result<ShapeMargin> {
        let margins = grid_margins(shape, &grid, &reference, perimeter_at)?;
        let mut m = blank_margin(shape);
        record_worst(&mut m, &grid, &margins);
        let positive = margins[1..].iter().copied().fold(f64::INFINITY, f64::min);
        m.positive_depth_margin = Some(positive);
        if m.worst_margin < -tol {
            let gap = -m.worst_margin;
            fail(&mut m, format!("perimeter below the triangle's by {gap}"));
        }
        if shape.is_reference {
            let spread = margins.iter().map(|v| v.abs()).fold(0.0, f64::max);
            if spread > tol {
                fail(&mut m, format!("reference shape deviates by {spread}"));
            }
        } else if !(positive > tol) {
            fail(
                &mut m,
                format!("equality at positive depth (margin {positive}) for a non-triangle"),
            );
        }
        Ok(m)
    });

    let mut report = CampaignReport::new(Campaign::Perim, tol);
    for (shape, r) in shapes.iter().zip(results) {
        report.absorb(shape, r?);
    }
    Ok(report)
}

pub fn verify_area_extremality(cfg: &CampaignConfig) -> Result<CampaignReport> {
    verify_area_on(&ensemble(cfg)?, cfg)
}

/// Depths for the derivative check: spread over the usable range and kept
/// [`BREAKPOINT_CLEARANCE`] away from breakpoints.
pub fn derivative_depths(p: &DiskPolygon) -> Result<Vec<f64>> {
    let prof = profile(p)?;
    let lo = 0.01;
    let hi = reuleaux_triangle_inradius().min(prof.inradius - 0.01);
    let mut depths = Vec::with_capacity(DERIVATIVE_DEPTHS);
    for j in 0..DERIVATIVE_DEPTHS {
        let base = lo + (hi - lo) * (j as f64 + 0.5) / DERIVATIVE_DEPTHS as f64;
        let chosen = [0.0, 2.0, -2.0, 4.0, -4.0]
            .iter()
            .map(|k| base + k * BREAKPOINT_CLEARANCE)
            .find(|&t| t > lo && t < hi && prof.distance_to_breakpoint(t) >= BREAKPOINT_CLEARANCE);
        if let Some(t) = chosen {
            depths.push(t);
        }
    }
    Ok(depths)
}

/// Largest `|(A(t+Δ) − A(t−Δ))/(2Δ) + P(t)|` over `depths`.
pub fn derivative_error(p: &DiskPolygon, depths: &[f64]) -> Result<f64> {
    let mut worst = 0.0_f64;
    for &t in depths {
        let plus = area_at(p, t + DERIVATIVE_STEP)?;
        let minus = area_at(p, t - DERIVATIVE_STEP)?;
        let slope = (plus - minus) / (2.0 * DERIVATIVE_STEP);
        worst = worst.max((slope + perimeter_at(p, t)?).abs());
    }
    Ok(worst)
}

pub fn verify_area_on(shapes: &[TestShape], cfg: &CampaignConfig) -> Result<CampaignReport> {
    cfg.validate()?;
    let grid = cfg.depth_grid();
    let triangle = ReuleauxPolygon::triangle();
    let reference: Vec<f64> = grid
        .iter()
        .map(|&t| area_at(triangle.underlying(), t))
        .collect::<Result<_>>()?;
    let tol = cfg.tolerance;

    let results = par_map(shapes, cfg.workers, |shape| -> Result<ShapeMargin> {
        let margins = grid_margins(shape, &grid, &reference, area_at)?;
        let mut m = blank_margin(shape);
        record_worst(&mut m, &grid, &margins);
        if m.worst_margin < -tol {
            let gap = -m.worst_margin;
            fail(&mut m, format!("area below the triangle's by {gap}"));
        }
        if shape.is_reference {
            let spread = margins.iter().map(|v| v.abs()).fold(0.0, f64::max);
            if spread > tol {
                fail(&mut m, format!("reference shape deviates by {spread}"));
            }
        }
        if let Some(w) = margins.windows(2).find(|w| w[1] > w[0] + tol) {
            fail(
                &mut m,
                format!("area difference increases from {} to {}", w[0], w[1]),
            );
        }
        let depths = derivative_depths(&shape.polygon)?;
        let err = derivative_error(&shape.polygon, &depths)?;
        m.derivative_error = Some(err);
        if depths.is_empty() {
            fail(
                &mut m,
                "no depth clear of breakpoints for the derivative check".into(),
            );
        }
        if err > DERIVATIVE_TOL {
            fail(&mut m, format!("|dA/dt + P| = {err}"));
        }
        Ok(m)
    });

    let mut report = CampaignReport::new(Campaign::Area, tol);
    for (shape, r) in shapes.iter().zip(results) {
        report.absorb(shape, r?);
    }
    Ok(report)
}

pub fn verify_cheeger_extremality(cfg: &CampaignConfig) -> Result<CampaignReport> {
    verify_cheeger_on(&ensemble(cfg)?, cfg)
}

pub fn verify_cheeger_on(shapes: &[TestShape], cfg: &CampaignConfig) -> Result<CampaignReport> {
    cfg.validate()?;
    let tol = cfg.tolerance;
    let h_ref = cheeger(ReuleauxPolygon::triangle().underlying())?.h;
    let disk = build_intersection(&[Point2::ORIGIN], 0.5)?;
    let h_disk = cheeger(&disk)?.h;

    let results = par_map(shapes, cfg.workers, |shape| -> Result<ShapeMargin> {
        let h = cheeger(&shape.polygon)?.h;
        let mut m = blank_margin(shape);
        m.value = Some(h);
        m.worst_margin = h_ref - h;
        if m.worst_margin < -tol {
            fail(&mut m, format!("h = {h} exceeds the triangle's {h_ref}"));
        }
        if shape.is_reference {
            if m.worst_margin.abs() > tol {
                fail(
                    &mut m,
                    format!("reference shape has h = {h}, expected {h_ref}"),
                );
            }
        } else if !(m.worst_margin > 0.0) {
            fail(&mut m, format!("non-triangle attains h = {h}"));
        }
        Ok(m)
    });

    let mut report = CampaignReport::new(Campaign::Cheeger, tol);
    report.reference_h = Some(h_ref);
    report.disk_h = Some(h_disk);
    let mut max_h = h_ref;
    for (shape, r) in shapes.iter().zip(results) {
        let m = r?;
        max_h = max_h.max(m.value.unwrap_or(f64::NEG_INFINITY));
        report.absorb(shape, m);
    }
    report.max_h = Some(max_h);
    if (h_disk - 4.0).abs() > DISK_CHEEGER_TOL {
        report.pass = false;
        report.counterexamples.push(Counterexample {
            label: "disk(width 1)".into(),
            angles: Vec::new(),
            t: None,
            margin: h_disk - 4.0,
            reason: format!("disk of width 1 has h = {h_disk}, expected 4"),
        });
    }
    if !(h_disk < h_ref) {
        report.pass = false;
    }
    Ok(report)
}

/// `f(β) = 2α_t(β/2)` on `[0, π/3]`.
pub fn turning_cost(t: f64, beta: f64) -> Result<f64> {
    Ok(2.0 * alpha_at(t, 0.5 * beta)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaxSumSolution {
    pub maximizer: Vec<f64>,
    pub value: f64,
}

/// Maximizes `Σ f(βᵢ)` over `βᵢ ∈ [0, π/3]`, `Σ βᵢ = betas_total`.
///
/// `f` is convex, so a maximizer sits at a vertex of the feasible polytope:
/// as many entries at π/3 as the budget allows, one entry holding the
/// remainder, the rest at zero.
pub fn max_sum_f(betas_total: f64, count: usize, t: f64) -> Result<MaxSumSolution> {
    if count < 3 {
        return Err(Error::Infeasible(format!(
            "count = {count}, need at least 3"
        )));
    }
    let cap = count as f64 * FRAC_PI_3;
    if !(betas_total >= -1e-12 && betas_total <= cap + 1e-12) {
        return Err(Error::Infeasible(format!(
            "total {betas_total} outside [0, {cap}] for {count} entries"
        )));
    }
    let mut left = betas_total.clamp(0.0, cap);
    let mut maximizer = Vec::with_capacity(count);
    for _ in 0..count {
        let b = left.min(FRAC_PI_3);
        // absorb rounding so that full entries are exactly π/3
        let b = if FRAC_PI_3 - b <= 1e-14 { FRAC_PI_3 } else { b };
        maximizer.push(b);
        left = (left - b).max(0.0);
    }
    let value = maximizer
        .iter()
        .map(|&b| turning_cost(t, b))
        .sum::<Result<f64>>()?;
    Ok(MaxSumSolution { maximizer, value })
}

/// Entries strictly inside `(0, π/3)`.
pub fn interior_components(betas: &[f64]) -> usize {
    betas
        .iter()
        .filter(|&&b| b > INTERIOR_TOL && b < FRAC_PI_3 - INTERIOR_TOL)
        .count()
}

/// Euclidean projection onto `{β ∈ [0, π/3]ⁿ : Σβ = total}`.
pub fn project_budget(y: &[f64], total: f64) -> Vec<f64> {
    let apply = |shift: f64| -> Vec<f64> {
        y.iter()
            .map(|&v| (v - shift).clamp(0.0, FRAC_PI_3))
            .collect()
    };
    let sum = |shift: f64| -> f64 { apply(shift).iter().sum() };
    let mut lo = y.iter().copied().fold(f64::INFINITY, f64::min) - FRAC_PI_3;
    let mut hi = y.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sum(mid) > total {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    apply(0.5 * (lo + hi))
}

fn objective(t: f64, betas: &[f64]) -> Result<f64> {
    betas.iter().map(|&b| turning_cost(t, b)).sum()
}

fn cost_slope(t: f64, beta: f64) -> Result<f64> {
    let h = 1e-6;
    let a = (beta - h).max(0.0);
    let b = (beta + h).min(FRAC_PI_3);
    Ok((turning_cost(t, b)? - turning_cost(t, a)?) / (b - a))
}

/// Projected gradient ascent from `start`; returns the final point.
pub fn projected_ascent(t: f64, total: f64, start: &[f64], iterations: usize) -> Result<Vec<f64>> {
    let mut x = project_budget(start, total);
    for _ in 0..iterations {
        let grad: Vec<f64> = x.iter().map(|&b| cost_slope(t, b)).collect::<Result<_>>()?;
        let mean = grad.iter().sum::<f64>() / grad.len() as f64;
        let scale = grad.iter().map(|g| (g - mean).abs()).fold(0.0, f64::max);
        if scale == 0.0 {
            break;
        }
        let step = 0.02 / scale;
        let y: Vec<f64> = x
            .iter()
            .zip(&grad)
            .map(|(&v, &g)| v + step * (g - mean))
            .collect();
        x = project_budget(&y, total);
    }
    Ok(x)
}

/// Checks one `(t, ε, count)` instance of the budgeted problem.
pub fn check_max_sum_case(t: f64, epsilon: f64, count: usize, seed: u64) -> Result<MaxSumCase> {
    let total = PI - epsilon;
    let best = max_sum_f(total, count, t)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut random_best = f64::NEG_INFINITY;
    for _ in 0..MAXSUMF_RANDOM_POINTS {
        let y: Vec<f64> = (0..count).map(|_| rng.gen_range(0.0..=FRAC_PI_3)).collect();
        let x = project_budget(&y, total);
        random_best = random_best.max(objective(t, &x)?);
    }

    let mut ascent_best = f64::NEG_INFINITY;
    let mut ascent_point = Vec::new();
    for _ in 0..MAXSUMF_ASCENT_STARTS {
        let y: Vec<f64> = (0..count).map(|_| rng.gen_range(0.0..=FRAC_PI_3)).collect();
        let x = projected_ascent(t, total, &y, 400)?;
        let v = objective(t, &x)?;
        if v > ascent_best {
            ascent_best = v;
            ascent_point = x;
        }
    }

    let interior = interior_components(&best.maximizer);
    let ascent_interior = interior_components(&ascent_point);
    let pass = random_best <= best.value + MAXSUMF_VALUE_TOL
        && ascent_best <= best.value + MAXSUMF_VALUE_TOL
        && ascent_best >= best.value - MAXSUMF_ASCENT_TOL
        && interior <= 1
        && ascent_interior <= 1;
    Ok(MaxSumCase {
        t,
        epsilon,
        count,
        maximizer: best.maximizer,
        value: best.value,
        interior_components: interior,
        random_best,
        ascent_best,
        ascent_interior_components: ascent_interior,
        pass,
    })
}

pub fn verify_max_sum_f(cfg: &CampaignConfig) -> Result<CampaignReport> {
    cfg.validate()?;
    let mut report = CampaignReport::new(Campaign::Maxsumf, MAXSUMF_VALUE_TOL);
    let mut seed = cfg.seed;
    for &t in &MAXSUMF_DEPTHS {
        let full = 3.0 * turning_cost(t, FRAC_PI_3)?;
        for &count in &MAXSUMF_COUNTS {
            for &eps in &MAXSUMF_EPSILONS {
                let case = check_max_sum_case(t, eps, count, seed)?;
                seed = seed.wrapping_add(1);
                let mut why = Vec::new();
                if !case.pass {
                    why.push("maximizer not confirmed by sampling/ascent".to_string());
                }
                if eps == 0.0 && (case.value - full).abs() > MAXSUMF_VALUE_TOL {
                    why.push(format!("M(0) = {} but 3 f(pi/3) = {full}", case.value));
                }
                if !why.is_empty() {
                    report.pass = false;
                    report.counterexamples.push(Counterexample {
                        label: format!("t={t}, eps={eps}, count={count}"),
                        angles: case.maximizer.clone(),
                        t: Some(t),
                        margin: case.value - case.random_best.max(case.ascent_best),
                        reason: why.join("; "),
                    });
                }
                report.worst_margin = report
                    .worst_margin
                    .min(case.value - case.random_best.max(case.ascent_best));
                report.maxsumf_cases.push(case);
            }
            // M(ε) must not increase along a fine ε grid
            let values: Vec<f64> = (0..=24)
                .map(|j| max_sum_f(PI - PI * j as f64 / 24.0, count, t).map(|s| s.value))
                .collect::<Result<_>>()?;
            if let Some(w) = values.windows(2).find(|w| w[1] > w[0] + MAXSUMF_VALUE_TOL) {
                report.pass = false;
                report.counterexamples.push(Counterexample {
                    label: format!("t={t}, count={count}"),
                    angles: Vec::new(),
                    t: Some(t),
                    margin: w[0] - w[1],
                    reason: "M(eps) increases".into(),
                });
            }
        }
    }
    Ok(report)
}

/// Runs `campaign` on the random ensemble described by `cfg`.
pub fn run_campaign(campaign: Campaign, cfg: &CampaignConfig) -> Result<CampaignReport> {
    match campaign {
        Campaign::Perim => verify_perimeter_extremality(cfg),
        Campaign::Area => verify_area_extremality(cfg),
        Campaign::Cheeger => verify_cheeger_extremality(cfg),
        Campaign::Maxsumf => verify_max_sum_f(cfg),
    }
}

/// Runs `campaign` on caller-supplied shapes (ignored by maxsumf).
pub fn run_campaign_on(
    campaign: Campaign,
    shapes: &[TestShape],
    cfg: &CampaignConfig,
) -> Result<CampaignReport> {
    match campaign {
        Campaign::Perim => verify_perimeter_on(shapes, cfg),
        Campaign::Area => verify_area_on(shapes, cfg),
        Campaign::Cheeger => verify_cheeger_on(shapes, cfg),
        Campaign::Maxsumf => verify_max_sum_f(cfg),
    }
}

/// Inradius of a campaign shape; exposed for report post-processing.
pub fn shape_inradius(shape: &TestShape) -> f64 {
    inradius(&shape.polygon)
}
