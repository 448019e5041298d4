//! Arbitrary centers and radius, read as little-endian f64s.
#![no_main]

use std::f64::consts::TAU;

use cwidth::{build_intersection, Point2};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let values: Vec<f64> = data
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
        .collect();
    let Some((&radius, rest)) = values.split_first() else {
        return;
    };
    let centers: Vec<Point2> = rest
        .chunks_exact(2)
        .take(64)
        .map(|c| Point2::new(c[0], c[1]))
        .collect();
    let Ok(p) = build_intersection(&centers, radius) else {
        return;
    };
    let area = p.area();
    assert!(area.is_finite() && area >= 0.0);
    if p.radius() > 1e-3 && p.radius() < 1e3 && centers.iter().all(|c| c.norm() < 1e3) {
        assert!(
            (p.angle_sum() - TAU).abs() < 1e-6,
            "angle sum {}",
            p.angle_sum()
        );
    }
});
