#![no_main]

use libfuzzer_sys::fuzz_target;
use weylfold::json::{decode_point, point_to_json};
use weylfold::{Lex, Rational};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = decode_point::<Rational>(text) {
        let again = decode_point::<Rational>(&point_to_json(&p).to_string());
        assert_eq!(again.ok(), Some(p));
    }
    if let Ok(p) = decode_point::<Lex>(text) {
        let again = decode_point::<Lex>(&point_to_json(&p).to_string());
        assert_eq!(again.ok(), Some(p));
    }
});
