#![no_main]

use libfuzzer_sys::fuzz_target;
use weylfold::literal::parse_lex_point;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = parse_lex_point(text) {
        let rendered: Vec<String> = p.coords().iter().map(|c| format!("{}:{}", c.0, c.1)).collect();
        assert_eq!(parse_lex_point(&rendered.join(",")).ok(), Some(p));
    }
});
