//! Fixtures shared by the benchmarks.

use std::path::{Path, PathBuf};

use toric_cy4::Fan;
use toric_cy4_cli::parse_fan_file;

pub fn fans_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/fans")
}

/// Every bundled fan as `(file stem, fan)`, sorted by stem.
pub fn bundled_fans() -> Vec<(String, Fan)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(fans_dir())
        .expect("data/fans exists")
        .map(|e| e.expect("readable entry").path())
        .filter(|p| p.extension().is_some_and(|e| e == "fan"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let stem = p.file_stem().unwrap().to_string_lossy().into_owned();
            let fan = parse_fan_file(&p)
                .and_then(|f| f.to_fan())
                .expect("bundled fan parses");
            (stem, fan)
        })
        .collect()
}
