#![no_main]
use ainf_bar::json::{ainf_to_json, parse_ainf};
use coeff_core::Ring;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(a) = parse_ainf(data, Ring::Rat) {
        let again = parse_ainf(&ainf_to_json(&a).to_string(), Ring::Rat).expect("canonical form parses");
        assert_eq!(again, a);
    }
});
