#![no_main]

use libfuzzer_sys::fuzz_target;
use strip_poise::format::{parse, print};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(file) = parse(text) {
        assert_eq!(parse(&print(&file)).as_ref(), Ok(&file));
        let _ = file.augmented();
    }
});
