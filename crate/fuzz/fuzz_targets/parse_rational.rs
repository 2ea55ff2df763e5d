#![no_main]

use apery_zeta::exact::parse_rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 4096 {
        return;
    }
    if let Ok(x) = parse_rational(text) {
        let again = parse_rational(&x.to_string()).expect("display output parses");
        assert_eq!(x, again);
    }
});
