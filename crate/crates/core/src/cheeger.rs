//! Cheeger constant of a disk-polygon.
//!
//! For planar convex sets `h(Ω) = 1/t*`, where `t*` is the unique depth
//! with `|Ω₋ₜ*| = π t*²`. The left side strictly decreases in `t` and the
//! right side strictly increases, so `g(t) = |Ω₋ₜ| − π t²` has a single
//! sign change on `[0, inradius]` and bisection finds it.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::disk_polygon::DiskPolygon;
use crate::error::{Error, Result};
use crate::inner_parallel::{inner_measures, inradius};

/// Upper bound on bisection steps.
pub const MAX_BISECTIONS: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheegerResult {
    pub t_star: f64,
    pub h: f64,
    /// `| |Ω₋ₜ*| − π t*² |`.
    pub residual: f64,
    pub iterations: usize,
}

fn crossing_gap(p: &DiskPolygon, t: f64) -> Result<f64> {
    Ok(inner_measures(p, t)?.area - PI * t * t)
}

pub fn cheeger(p: &DiskPolygon) -> Result<CheegerResult> {
    let mut lo = 0.0_f64;
    let mut hi = inradius(p);
    if !(hi > 0.0) {
        return Err(Error::DegenerateIntersection);
    }
    let mut iterations = 0;
    while iterations < MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        if crossing_gap(p, mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t_star = 0.5 * (lo + hi);
    Ok(CheegerResult {
        t_star,
        h: 1.0 / t_star,
        residual: crossing_gap(p, t_star)?.abs(),
        iterations,
    })
}

/// One row of the `|Ω₋ₜ|` versus `π t²` comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrossingSample {
    pub t: f64,
    pub area: f64,
    pub disk_area: f64,
}

impl CrossingSample {
    pub fn difference(&self) -> f64 {
        self.area - self.disk_area
    }
}

/// `samples` evenly spaced depths on `[0, inradius]`.
pub fn crossing_curve(p: &DiskPolygon, samples: usize) -> Result<Vec<CrossingSample>> {
    if samples < 2 {
        return Err(Error::OutOfRange(format!(
            "samples = {samples}, need at least 2"
        )));
    }
    let r_in = inradius(p);
    (0..samples)
        .map(|i| {
            let t = if i + 1 == samples {
                r_in
            } else {
                r_in * i as f64 / (samples - 1) as f64
            };
            Ok(CrossingSample {
                t,
                area: inner_measures(p, t)?.area,
                disk_area: PI * t * t,
            })
        })
        .collect()
}

/// Number of strict sign changes in the difference column.
pub fn sign_changes(curve: &[CrossingSample]) -> usize {
    let signs: Vec<f64> = curve
        .iter()
        .map(|s| s.difference())
        .filter(|d| *d != 0.0)
        .map(f64::signum)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}
