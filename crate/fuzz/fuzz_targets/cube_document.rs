#![no_main]

use libfuzzer_sys::fuzz_target;
use scl_core::cubes::format::{config_to_json, is_scl_document, parse_config, parse_scl, scl_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = is_scl_document(text);
    if let Ok(c) = parse_config(text) {
        assert!(c.validate().is_ok());
        assert_eq!(parse_config(&config_to_json(&c)).unwrap(), c);
    }
    if let Ok(e) = parse_scl(text) {
        assert!(e.validate().is_ok());
        assert_eq!(parse_scl(&scl_to_json(&e)).unwrap(), e);
    }
});
