#![no_main]
use coeff_core::Ring;
use libfuzzer_sys::fuzz_target;
use transfer::json::parse_transfer_input;

fuzz_target!(|data: &str| {
    let _ = parse_transfer_input(data, Ring::Rat);
});
