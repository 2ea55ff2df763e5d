#![no_main]

use apery_zeta::VerificationReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(report) = VerificationReport::from_json(text) {
        let again = VerificationReport::from_json(&report.to_json()).expect("round trip");
        assert_eq!(report.to_json(), again.to_json());
    }
});
