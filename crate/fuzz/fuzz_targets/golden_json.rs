#![no_main]
use coeff_core::Ring;
use finf_cli::parse_golden;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    let _ = parse_golden(data, Ring::Int);
});
