#![no_main]

use libfuzzer_sys::fuzz_target;
use ncent_cli::report::Report;
use ncent_core::verifier::SuiteReport;

fuzz_target!(|data: &[u8]| {
    if let Ok(report) = serde_json::from_slice::<Report>(data) {
        let text = serde_json::to_string(&report).unwrap();
        let again: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(again, report);
        let _ = report.to_text();
    }
    let _ = serde_json::from_slice::<SuiteReport>(data);
});
