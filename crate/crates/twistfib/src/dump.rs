//! Catalog and matrix dumps.

use serde::Serialize;
use twistfib_core::{CycleCatalog, CycleKind, SymplecticMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleRecord {
    pub label: String,
    pub word: String,
    pub homology: Vec<i64>,
}

/// `c1..c5, b0..b_{p-1}` for `θ1`, then the same for `θ2`.
pub fn cycle_records(cat: &CycleCatalog) -> Vec<CycleRecord> {
    let mut entries: Vec<_> = cat.iter().collect();
    entries.sort_by_key(|(l, _)| (l.family, l.kind == CycleKind::B, l.index));
    entries
        .into_iter()
        .map(|(l, e)| CycleRecord { label: l.to_string(), word: e.word.to_string(), homology: e.class.coeffs().to_vec() })
        .collect()
}

pub fn cycles_json(cat: &CycleCatalog) -> String {
    let mut s = serde_json::to_string_pretty(&cycle_records(cat)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn cycles_text(cat: &CycleCatalog) -> String {
    let records = cycle_records(cat);
    let w = records.iter().map(|r| r.label.len()).max().unwrap_or(0);
    records
        .iter()
        .map(|r| {
            let h: Vec<String> = r.homology.iter().map(i64::to_string).collect();
            format!("{:<w$}  {}  [{}]\n", r.label, r.word, h.join(" "))
        })
        .collect()
}

/// Rows of decimal strings, so big entries survive any JSON reader.
pub fn matrix_json(m: &SymplecticMatrix) -> String {
    let rows: Vec<Vec<String>> = m.matrix().row_iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    let mut s = serde_json::to_string(&rows).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use twistfib_core::build_catalog;

    #[test]
    fn p3_records() {
        let cat = build_catalog(3).unwrap();
        let r = cycle_records(&cat);
        assert_eq!(r.len(), 16);
        assert_eq!(r[0].label, "c1^1");
        assert_eq!(r[0].word, "a1");
        assert_eq!(r[5].label, "b0^1");
        assert!(cycles_text(&cat).lines().next().unwrap().starts_with("c1^1  a1  [1 0 0 0"));
    }

    #[test]
    fn json_roundtrip() {
        let cat = build_catalog(9).unwrap();
        let v: serde_json::Value = serde_json::from_str(&cycles_json(&cat)).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 28);
    }
}
