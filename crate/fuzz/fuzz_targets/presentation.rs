#![no_main]

use libfuzzer_sys::fuzz_target;
use scl_core::pl::Presentation;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = Presentation::parse(text) {
        assert_eq!(Presentation::parse(&p.to_json()).unwrap(), p);
        let _ = p.to_fat();
    }
});
