#![no_main]

use cwidth::harness::CampaignConfig;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(cfg) = serde_json::from_slice::<CampaignConfig>(data) {
        if cfg.validate().is_ok() {
            assert!(cfg.depth_grid().len() == cfg.t_grid_size);
        }
    }
});
