#![no_main]

use libfuzzer_sys::fuzz_target;
use swapmagic::constructions::AstrayLabeling;
use swapmagic::io::parse_labeling;
use swapmagic::verification::check_astray;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok((t, meta)) = parse_labeling(text) else {
        return;
    };
    if let Ok(Some(astray)) = meta.astray_edges(&t) {
        let b = meta.b.unwrap_or(3);
        let report = check_astray(&t, &astray, b);
        assert_eq!(
            report.pass,
            AstrayLabeling::from_parts(t, astray, b).is_ok()
        );
    }
});
