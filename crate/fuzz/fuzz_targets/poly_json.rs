#![no_main]

use libfuzzer_sys::fuzz_target;
use tlqkz::arith::{QLaurent, Rat};
use tlqkz::serial::{poly_from_json, poly_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else { return };
    if let Ok(p) = poly_from_json::<QLaurent>(&v) {
        assert_eq!(poly_from_json::<QLaurent>(&poly_to_json(&p)).unwrap(), p);
    }
    if let Ok(p) = poly_from_json::<Rat>(&v) {
        assert_eq!(poly_from_json::<Rat>(&poly_to_json(&p)).unwrap(), p);
    }
});
