#![no_main]

use hcc::covers::{parse_homomorphism, parse_homomorphism_elementary};
use hcc::groupring::{make_cyclic, make_elementary_abelian};
use hcc::presentations::parse_presentation;
use hcc::Prime;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // First line picks the source presentation, the rest is the map.
    let (head, body) = text.split_once('\n').unwrap_or((text, ""));
    let Ok(pres) = parse_presentation(head) else { return };
    let two = Prime::new(2).unwrap();
    let three = Prime::new(3).unwrap();
    let _ = parse_homomorphism_elementary(body, &pres, two);
    let _ = parse_homomorphism_elementary(body, &pres, three);
    if let Ok(h) = make_elementary_abelian(two, 2) {
        let _ = parse_homomorphism(body, &pres, &h, two);
    }
    if let Ok(h) = make_cyclic(6) {
        if let Ok(hom) = parse_homomorphism(body, &pres, &h, three) {
            assert!(hom.images().iter().all(|&g| g < 6));
        }
    }
});
