#![no_main]

use bolnet::loops::format::{parse_loop, to_text};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(l) = parse_loop(text, true) {
        let printed = to_text(&l);
        let again = parse_loop(&printed, false).expect("printed table parses");
        assert_eq!(again.rows(), l.rows());
        assert_eq!(to_text(&again), printed);
    }
});
