#![no_main]

use libfuzzer_sys::fuzz_target;
use swapmagic::constructions::cocktail::parse_cocktail;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(c) = parse_cocktail(text) {
        let target = c.target();
        assert!(c.vertex_sums().iter().all(|&s| s == target));
        assert_eq!(parse_cocktail(&c.to_json()).expect("own output parses"), c);
    }
});
