#![no_main]

use libfuzzer_sys::fuzz_target;
use strip_poise::format::parse_rational;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_rational(s) {
        assert_eq!(parse_rational(&r.to_string()), Ok(r));
    }
});
