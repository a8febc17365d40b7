#![no_main]

use libfuzzer_sys::fuzz_target;
use weylfold::literal::parse_rational;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = parse_rational(text) {
        // The reduced `p/q` rendering parses back to the same value.
        assert_eq!(parse_rational(&r.to_string()).ok(), Some(r));
    }
});
