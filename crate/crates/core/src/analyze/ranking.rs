use std::collections::HashMap;
use std::io::Write;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct RankEntry {
    pub institution_id: String,
    pub value: f64,
    pub rank: usize,
}

/// Descending competition ("1224") ranking: rank 1 is the largest value and
/// tied values share the smallest rank of their group.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RankTable {
    /// Sorted by rank, then institution id.
    pub entries: Vec<RankEntry>,
}

impl RankTable {
    pub fn rank_of(&self, institution_id: &str) -> Option<usize> {
        self.entries.iter().find(|e| e.institution_id == institution_id).map(|e| e.rank)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Map from institution id to rank.
    pub fn ranks(&self) -> HashMap<&str, usize> {
        self.entries.iter().map(|e| (e.institution_id.as_str(), e.rank)).collect()
    }
}

pub fn assign_ranks<S: AsRef<str>>(values: &[f64], ids: &[S]) -> Result<RankTable> {
    if values.len() != ids.len() {
        return Err(Error::LengthMismatch { left: values.len(), right: ids.len() });
    }
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then_with(|| ids[a].as_ref().cmp(ids[b].as_ref())));
    let mut entries = Vec::with_capacity(idx.len());
    let mut rank = 0;
    for (pos, &i) in idx.iter().enumerate() {
        if pos == 0 || values[i] != values[idx[pos - 1]] {
            rank = pos + 1;
        }
        entries.push(RankEntry { institution_id: ids[i].as_ref().to_string(), value: values[i], rank });
    }
    Ok(RankTable { entries })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankShiftRow {
    pub institution_id: String,
    pub benchmark_rank: usize,
    pub method_rank: usize,
    /// `method_rank - benchmark_rank`; positive means the method ranks the
    /// institution lower.
    pub shift: i64,
}

/// Per-institution rank change from `benchmark` to `method`, ordered by
/// benchmark rank.
pub fn rank_shift(benchmark: &RankTable, method: &RankTable) -> Result<Vec<RankShiftRow>> {
    let method_ranks = method.ranks();
    if method_ranks.len() != benchmark.len() {
        let bench = benchmark.ranks();
        let stray = method
            .entries
            .iter()
            .find(|e| !bench.contains_key(e.institution_id.as_str()))
            .map(|e| e.institution_id.clone())
            .or_else(|| {
                benchmark
                    .entries
                    .iter()
                    .find(|e| !method_ranks.contains_key(e.institution_id.as_str()))
                    .map(|e| e.institution_id.clone())
            })
            .unwrap_or_default();
        return Err(Error::IdSetMismatch(stray));
    }
    benchmark
        .entries
        .iter()
        .map(|e| {
            let m = *method_ranks
                .get(e.institution_id.as_str())
                .ok_or_else(|| Error::IdSetMismatch(e.institution_id.clone()))?;
            Ok(RankShiftRow {
                institution_id: e.institution_id.clone(),
                benchmark_rank: e.rank,
                method_rank: m,
                shift: m as i64 - e.rank as i64,
            })
        })
        .collect()
}

pub fn write_rank_shift_csv<W: Write>(rows: &[RankShiftRow], writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["institution_id", "benchmark_rank", "method_rank", "shift"])?;
    for r in rows {
        w.write_record([
            r.institution_id.clone(),
            r.benchmark_rank.to_string(),
            r.method_rank.to_string(),
            r.shift.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranks_in_input_order(values: &[f64]) -> Vec<usize> {
        let ids: Vec<String> = (0..values.len()).map(|i| format!("i{i}")).collect();
        let t = assign_ranks(values, &ids).unwrap();
        ids.iter().map(|id| t.rank_of(id).unwrap()).collect()
    }

    #[test]
    fn distinct_values() {
        assert_eq!(ranks_in_input_order(&[5.0, 1.0, 3.0]), vec![1, 3, 2]);
    }

    #[test]
    fn competition_ties() {
        assert_eq!(ranks_in_input_order(&[10.0, 20.0, 20.0, 5.0]), vec![3, 1, 1, 4]);
    }

    #[test]
    fn single_value() {
        assert_eq!(ranks_in_input_order(&[42.0]), vec![1]);
    }

    #[test]
    fn entries_sorted_by_rank_then_id() {
        let t = assign_ranks(&[1.0, 2.0, 2.0], &["c", "b", "a"]).unwrap();
        let order: Vec<_> = t.entries.iter().map(|e| (e.institution_id.as_str(), e.rank)).collect();
        assert_eq!(order, [("a", 1), ("b", 1), ("c", 3)]);
    }

    #[test]
    fn length_mismatch() {
        assert!(matches!(assign_ranks(&[1.0], &["a", "b"]), Err(Error::LengthMismatch { .. })));
    }

    fn table(pairs: &[(&str, usize)]) -> RankTable {
        RankTable {
            entries: pairs
                .iter()
                .map(|&(id, rank)| RankEntry { institution_id: id.into(), value: -(rank as f64), rank })
                .collect(),
        }
    }

    #[test]
    fn published_shifts() {
        let bench = table(&[("0001", 468), ("0009", 513)]);
        let method = table(&[("0001", 430), ("0009", 672)]);
        let rows = rank_shift(&bench, &method).unwrap();
        assert_eq!(rows[0].shift, -38);
        assert_eq!(rows[1].shift, 159);
    }

    #[test]
    fn identical_tables_have_no_shift() {
        let t = assign_ranks(&[3.0, 1.0, 2.0, 2.0], &["a", "b", "c", "d"]).unwrap();
        assert!(rank_shift(&t, &t).unwrap().iter().all(|r| r.shift == 0));
    }

    #[test]
    fn mismatched_ids() {
        let a = table(&[("x", 1), ("y", 2)]);
        let b = table(&[("x", 1), ("z", 2)]);
        assert!(matches!(rank_shift(&a, &b), Err(Error::IdSetMismatch(_))));
        let c = table(&[("x", 1)]);
        assert!(matches!(rank_shift(&a, &c), Err(Error::IdSetMismatch(ref id)) if id == "y"));
    }
}
