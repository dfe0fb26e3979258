#![no_main]

use libfuzzer_sys::fuzz_target;
use powspec::spectra::{ExactParams, UniversalParams};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let exact = text.parse::<ExactParams>();
    let float = text.parse::<UniversalParams>();
    // The binary64 form can only fail where the exact form fails or alpha rounds to zero.
    if exact.is_err() {
        assert!(float.is_err());
    }
    if let Ok(p) = float {
        assert!(p.alpha() != 0.0);
        assert!(p.quadruple().iter().all(|x| x.is_finite()));
    }
});
