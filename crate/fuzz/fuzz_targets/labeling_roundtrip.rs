#![no_main]

use libfuzzer_sys::fuzz_target;
use swapmagic::io::{labeling_to_json, parse_labeling};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((t, meta)) = parse_labeling(text) {
        let out = labeling_to_json(&t, &meta).expect("accepted input serializes");
        let (back, meta_back) = parse_labeling(&out).expect("own output parses");
        assert_eq!(back, t);
        assert_eq!(meta_back, meta);
    }
});
