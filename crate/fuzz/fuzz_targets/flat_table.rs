#![no_main]

use libfuzzer_sys::fuzz_target;
use ncent_core::analytics::GroupAnalysis;
use ncent_core::FiniteGroup;

fuzz_target!(|data: &[u8]| {
    let Some((&order, rest)) = data.split_first() else {
        return;
    };
    let order = usize::from(order % 32);
    if order == 0 || rest.len() < order * order {
        return;
    }
    let table: Vec<u32> = rest[..order * order]
        .iter()
        .map(|&b| u32::from(b) % order as u32)
        .collect();
    if let Ok(g) = FiniteGroup::from_flat_table(order, table, "fuzz") {
        let a = GroupAnalysis::new(g);
        if let Ok(n) = a.n() {
            assert!(n >= 1 && n <= a.group().order());
        }
        let _ = a.bounds();
    }
});
