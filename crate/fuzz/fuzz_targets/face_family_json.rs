#![no_main]
use coeff_core::Ring;
use infty_face_modules::json::{family_to_json, parse_face_module, parse_family};
use libfuzzer_sys::fuzz_target;

// Input: a module document and a face document separated by a NUL byte.
fuzz_target!(|data: &str| {
    if let Ok(f) = parse_family(data, Ring::Int, true) {
        let again = parse_family(&family_to_json(&f).to_string(), Ring::Int, true).expect("canonical form parses");
        assert_eq!(family_to_json(&again), family_to_json(&f));
    }
    if let Some((module, faces)) = data.split_once('\0') {
        let _ = parse_face_module(module, faces, Ring::Rat);
    }
});
