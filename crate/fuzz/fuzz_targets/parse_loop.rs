#![no_main]

use bolnet::loops::format::parse_loop;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for normalize in [false, true] {
        if let Ok(l) = parse_loop(text, normalize) {
            // anything accepted is a loop with unit 0
            assert!((0..l.order()).all(|x| l.mul(0, x) == x && l.mul(x, 0) == x));
        }
    }
});
