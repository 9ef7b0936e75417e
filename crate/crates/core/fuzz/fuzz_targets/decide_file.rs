#![no_main]

use libfuzzer_sys::fuzz_target;
use strip_poise::format::parse;
use strip_poise::oracle::oracle_poised;
use strip_poise::reduction::decide;

// Small files only: the determinant grows quickly with the strip length.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 2048 {
        return;
    }
    let Ok(file) = parse(text) else { return };
    if file.vertices.len() > 14 || file.nodes.len() > 20 {
        return;
    }
    let Ok(p) = file.augmented() else { return };
    assert_eq!(decide(&p).poised, oracle_poised(&p));
});
