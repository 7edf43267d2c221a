#![no_main]

use libfuzzer_sys::fuzz_target;
use swapmagic::io::parse_labeling;
use swapmagic::{alpha_of, vertex_sums};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((t, _)) = parse_labeling(text) {
        // Anything accepted is a bijection, so the sums total ε(ε+1).
        let eps = t.edge_count() as i64;
        assert_eq!(vertex_sums(&t).iter().sum::<i64>(), eps * (eps + 1));
        assert!(alpha_of(&t) >= 0);
    }
});
