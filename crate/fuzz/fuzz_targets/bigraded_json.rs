#![no_main]
use coeff_core::Ring;
use colored_core::json::{bigraded_to_json, parse_bigraded, parse_colored};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(m) = parse_bigraded(data, Ring::Rat) {
        let again = parse_bigraded(&bigraded_to_json(&m).to_string(), Ring::Rat).expect("canonical form parses");
        assert_eq!(again, m);
    }
    let _ = parse_colored(data, Ring::Mod(5));
});
