#![no_main]
use koszul_dual::WedgeTuple;
use libfuzzer_sys::fuzz_target;
use omega_finf::OmegaWord;

fuzz_target!(|data: &str| {
    if let Ok(w) = data.parse::<OmegaWord<WedgeTuple>>() {
        assert_eq!(w.to_string().parse::<OmegaWord<WedgeTuple>>().unwrap(), w);
    }
});
