#![no_main]

use libfuzzer_sys::fuzz_target;
use powspec::GroupSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = text.parse::<GroupSpec>() {
        assert_eq!(spec.to_string().parse::<GroupSpec>().unwrap(), spec);
    }
});
