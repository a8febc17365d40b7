#![no_main]

use libfuzzer_sys::fuzz_target;
use weylfold::literal::parse_point;
use weylfold::RootSystem;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = parse_point(text) {
        let rendered: Vec<String> = p.coords().iter().map(|c| c.to_string()).collect();
        assert_eq!(parse_point(&rendered.join(",")).ok(), Some(p.clone()));
        // Downstream validation never panics on parsed input.
        for label in ["A1", "A2", "A3"] {
            let rs = RootSystem::from_label(label).unwrap();
            let _ = weylfold::model_space::validate(&rs, &p);
        }
    }
});
