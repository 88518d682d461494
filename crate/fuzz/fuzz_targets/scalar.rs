#![no_main]
use coeff_core::Ring;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    let _ = Ring::parse(data);
    for ring in [Ring::Int, Ring::Rat, Ring::Mod(7)] {
        if let Ok(s) = ring.parse_scalar(data) {
            // Display is a fixed point of parsing.
            let again = ring.parse_scalar(&s.to_string()).expect("rendered scalar parses");
            assert_eq!(again, s);
        }
    }
});
