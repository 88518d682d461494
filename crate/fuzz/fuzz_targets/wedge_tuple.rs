#![no_main]
use koszul_dual::WedgeTuple;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(w) = data.parse::<WedgeTuple>() {
        assert_eq!(w.to_string().parse::<WedgeTuple>().unwrap(), w);
    }
});
