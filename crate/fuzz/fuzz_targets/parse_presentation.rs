#![no_main]

use hcc::presentations::parse_presentation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(pres) = parse_presentation(text) {
        // Whatever parses must survive a render/parse roundtrip.
        let again = parse_presentation(&pres.render()).expect("rendered presentation parses");
        assert_eq!(again, pres);
    }
});
