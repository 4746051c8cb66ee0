#![no_main]

use libfuzzer_sys::fuzz_target;
use ncent_core::io::{parse_cayley, render_cayley};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_cayley(text) {
        let back = parse_cayley(&render_cayley(&g)).expect("rendered table reparses");
        assert_eq!(back.flat_table(), g.flat_table());
    }
});
