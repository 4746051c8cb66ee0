#![no_main]

use libfuzzer_sys::fuzz_target;
use ncent_core::io::parse_permutations;

fuzz_target!(|data: &[u8]| {
    if data.len() > 64 * 1024 {
        return;
    }
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = parse_permutations(text);
    }
});
