#![no_main]

use libfuzzer_sys::fuzz_target;
use weylfold::literal::parse_word;
use weylfold::{CartanType, RootSystem};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(word) = parse_word(text) {
        let rs = RootSystem::new(CartanType::G2);
        let _ = rs.element_from_word(&word);
        let _ = rs.parse_longest_word(text);
    }
});
