#![no_main]

use cwidth::disk_polygon::parse_disk_polygon_json;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = parse_disk_polygon_json(text) {
        assert!(p.arc_count() >= 1);
        assert!(p.arcs().iter().all(|a| a.sweep > 0.0));
        let json = serde_json::to_string(&p.to_json()).unwrap();
        let again = parse_disk_polygon_json(&json).expect("round trip");
        assert_eq!(again.arc_count(), p.arc_count());
    }
});
