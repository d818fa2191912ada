//! Published per-twist signature increments for `p ∈ {3, 5, 7, 9}`.
//!
//! Each file is a flat comma-separated list of integers; line breaks are
//! ignored. The copies under `data/golden` are compiled in, and
//! `TWISTFIB_DATA_DIR` points at a directory with a `golden/` subdirectory
//! to use instead.

use std::path::{Path, PathBuf};

use thiserror::Error;

pub const DATA_DIR_ENV: &str = "TWISTFIB_DATA_DIR";

pub const GOLDEN_P: [u32; 4] = [3, 5, 7, 9];

const BUILTIN: [(u32, &str); 4] = [
    (3, include_str!("../data/golden/p3.csv")),
    (5, include_str!("../data/golden/p5.csv")),
    (7, include_str!("../data/golden/p7.csv")),
    (9, include_str!("../data/golden/p9.csv")),
];

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("failed to read {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("bad field `{field}` in golden data for p={p}")]
    Parse { p: u32, field: String },
}

pub fn parse_sequence(p: u32, text: &str) -> Result<Vec<i64>, GoldenError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|f| !f.is_empty())
        .map(|f| f.parse().map_err(|_| GoldenError::Parse { p, field: f.to_owned() }))
        .collect()
}

fn from_dir(dir: &Path, p: u32) -> Result<Option<Vec<i64>>, GoldenError> {
    let path = dir.join("golden").join(format!("p{p}.csv"));
    if !path.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(&path).map_err(|source| GoldenError::Read { path, source })?;
    parse_sequence(p, &text).map(Some)
}

/// Golden sequence for `p`, or `None` when no data exists.
pub fn golden_sequence(p: u32) -> Result<Option<Vec<i64>>, GoldenError> {
    if let Some(dir) = std::env::var_os(DATA_DIR_ENV) {
        return from_dir(Path::new(&dir), p);
    }
    BUILTIN
        .iter()
        .find(|(q, _)| *q == p)
        .map(|(_, text)| parse_sequence(p, text))
        .transpose()
}
