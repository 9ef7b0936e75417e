//! Replays the checked-in fuzz seeds through the same assertions as the fuzz targets.

use std::fs;
use std::path::PathBuf;

use strip_poise::format::{parse, parse_rational, print};
use strip_poise::oracle::oracle_poised;
use strip_poise::reduction::decide;

fn seeds(target: &str) -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.file_name().unwrap().to_string_lossy().starts_with("seed-"))
        .map(|p| {
            let text = fs::read_to_string(&p).unwrap();
            (p, text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds in {}", dir.display());
    out
}

#[test]
fn rational_seeds() {
    let mut accepted = 0;
    for (path, s) in seeds("parse_rational") {
        if let Ok(r) = parse_rational(&s) {
            assert_eq!(parse_rational(&r.to_string()), Ok(r), "{}", path.display());
            accepted += 1;
        }
    }
    assert!(accepted > 0);
}

#[test]
fn problem_file_seeds() {
    for (path, text) in seeds("parse_problem_file") {
        if let Ok(file) = parse(&text) {
            assert_eq!(parse(&print(&file)).as_ref(), Ok(&file), "{}", path.display());
        }
    }
}

#[test]
fn decide_seeds() {
    let mut decided = 0;
    for (path, text) in seeds("decide_file") {
        let Ok(file) = parse(&text) else { continue };
        let Ok(p) = file.augmented() else { continue };
        assert_eq!(decide(&p).poised, oracle_poised(&p), "{}", path.display());
        decided += 1;
    }
    assert!(decided > 0);
}
