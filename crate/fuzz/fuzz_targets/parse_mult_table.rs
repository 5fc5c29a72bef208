#![no_main]

use hcc::groupring::parse_mult_table;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(h) = parse_mult_table(text) {
        let n = h.size();
        for a in 0..n {
            assert_eq!(h.mul(a, h.inverse(a)), h.identity());
        }
    }
});
