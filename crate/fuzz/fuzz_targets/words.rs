#![no_main]

use libfuzzer_sys::fuzz_target;
use scl_core::pi0::{format_knot_word, format_link_word, parse_knot_word, parse_link_word};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(k) = parse_knot_word(text) {
        assert_eq!(parse_knot_word(&format_knot_word(&k)).unwrap(), k);
    }
    if let Ok(l) = parse_link_word(text) {
        assert_eq!(parse_link_word(&format_link_word(&l)).unwrap(), l);
    }
});
