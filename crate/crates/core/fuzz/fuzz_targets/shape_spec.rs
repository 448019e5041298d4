//! Shape descriptions in JSON or inline form.
#![no_main]

use cwidth::ShapeSpec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    let Ok(spec) = ShapeSpec::parse(data) else {
        return;
    };
    let reparsed = ShapeSpec::parse(&spec.to_json()).expect("serialized spec parses");
    assert_eq!(reparsed.to_json(), spec.to_json());

    let small = match &spec {
        ShapeSpec::ReuleauxRegular { n } | ShapeSpec::ReuleauxRandom { n, .. } => *n <= 101,
        ShapeSpec::ReuleauxAngles { angles } => angles.len() <= 101,
        ShapeSpec::DiskPolygon { centers, .. } => centers.len() <= 64,
    };
    if small {
        if let Ok(shape) = spec.build() {
            assert!(shape.polygon().perimeter().is_finite());
        }
    }
});
