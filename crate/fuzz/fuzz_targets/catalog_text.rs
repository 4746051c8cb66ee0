#![no_main]

use libfuzzer_sys::fuzz_target;
use ncent_core::io::{parse_catalog, render_catalog};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(entries) = parse_catalog(text) {
        let again = parse_catalog(&render_catalog(&entries)).expect("rendered catalog reparses");
        assert_eq!(again, entries);
    }
});
