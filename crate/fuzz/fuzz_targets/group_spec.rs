#![no_main]

use libfuzzer_sys::fuzz_target;
use ncent_core::io::parse_spec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // Accepted specs must print back to an equal spec.
    if let Ok(spec) = parse_spec(text) {
        let printed = spec.to_string();
        assert_eq!(parse_spec(&printed).as_ref(), Ok(&spec), "{printed}");
    }
});
