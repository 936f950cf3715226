//! Per-field reference statistics consumed by the normalization formulas.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::numeric::{fmt9, population_sd, two_pass_mean};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DegenerateFlag {
    ZeroMedian,
    ZeroSd,
    ZeroLogmean,
    ZeroLogsd,
}

impl DegenerateFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            DegenerateFlag::ZeroMedian => "ZERO_MEDIAN",
            DegenerateFlag::ZeroSd => "ZERO_SD",
            DegenerateFlag::ZeroLogmean => "ZERO_LOGMEAN",
            DegenerateFlag::ZeroLogsd => "ZERO_LOGSD",
        }
    }
}

impl fmt::Display for DegenerateFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Citation statistics of one field.
///
/// Standard deviations are population (divide-by-N) values; logarithms are
/// natural logs of `citations + 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldBaseline {
    pub field_id: String,
    pub n: usize,
    pub mean: f64,
    pub median: f64,
    pub sd: f64,
    pub log_mean: f64,
    pub log_sd: f64,
    pub sorted_citations: Vec<u64>,
    pub flags: Vec<DegenerateFlag>,
}

impl FieldBaseline {
    pub fn has_flag(&self, flag: DegenerateFlag) -> bool {
        self.flags.contains(&flag)
    }

    /// Pipe-separated flag list, empty when the baseline is healthy.
    pub fn flags_label(&self) -> String {
        self.flags.iter().map(|f| f.as_str()).collect::<Vec<_>>().join("|")
    }
}

/// Builds the baseline of one field from its citation counts (any order).
pub fn compute_field_baseline(citations: &[u64], field_id: &str) -> Result<FieldBaseline> {
    if citations.is_empty() {
        return Err(Error::EmptyField(field_id.to_string()));
    }
    let mut sorted = citations.to_vec();
    sorted.sort_unstable();
    Ok(baseline_from_sorted(sorted, field_id))
}

fn baseline_from_sorted(sorted: Vec<u64>, field_id: &str) -> FieldBaseline {
    let n = sorted.len();
    let raw: Vec<f64> = sorted.iter().map(|&c| c as f64).collect();
    let mean = two_pass_mean(&raw);
    let sd = population_sd(&raw, mean);
    let median = if n % 2 == 1 { raw[n / 2] } else { (raw[n / 2 - 1] + raw[n / 2]) / 2.0 };
    let logs: Vec<f64> = raw.iter().map(|&c| c.ln_1p()).collect();
    let log_mean = two_pass_mean(&logs);
    let log_sd = population_sd(&logs, log_mean);

    let mut flags = Vec::new();
    if median == 0.0 {
        flags.push(DegenerateFlag::ZeroMedian);
    }
    if sd == 0.0 {
        flags.push(DegenerateFlag::ZeroSd);
    }
    if log_mean == 0.0 {
        flags.push(DegenerateFlag::ZeroLogmean);
    }
    if log_sd == 0.0 {
        flags.push(DegenerateFlag::ZeroLogsd);
    }

    FieldBaseline {
        field_id: field_id.to_string(),
        n,
        mean,
        median,
        sd,
        log_mean,
        log_sd,
        sorted_citations: sorted,
        flags,
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BaselineSet {
    pub per_field: BTreeMap<String, FieldBaseline>,
    /// Records in the corpus the set was built from, before de-duplication.
    pub source_record_count: usize,
}

impl BaselineSet {
    pub fn get(&self, field_id: &str) -> Option<&FieldBaseline> {
        self.per_field.get(field_id)
    }

    pub fn len(&self) -> usize {
        self.per_field.len()
    }

    pub fn is_empty(&self) -> bool {
        self.per_field.is_empty()
    }

    /// `field_id,N,m,M,sd,m_ln,sd_ln,flags`, one row per field in id order.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(["field_id", "N", "m", "M", "sd", "m_ln", "sd_ln", "flags"])?;
        for b in self.per_field.values() {
            w.write_record([
                b.field_id.clone(),
                b.n.to_string(),
                fmt9(b.mean),
                fmt9(b.median),
                fmt9(b.sd),
                fmt9(b.log_mean),
                fmt9(b.log_sd),
                b.flags_label(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Sidecar with the sorted citation multiset of each field as
    /// `field_id,citations,count` run-length rows.
    pub fn write_sorted_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(["field_id", "citations", "count"])?;
        for b in self.per_field.values() {
            for run in b.sorted_citations.chunk_by(|a, b| a == b) {
                w.write_record([b.field_id.clone(), run[0].to_string(), run.len().to_string()])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

/// Groups the corpus by field and computes one baseline per field.
///
/// A paper listed under several institutions contributes once, with the
/// first occurrence winning.
pub fn compute_baseline_set(corpus: &Corpus) -> Result<BaselineSet> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut seen: HashSet<&str> = HashSet::with_capacity(corpus.len());
    let mut groups: BTreeMap<&str, Vec<u64>> = BTreeMap::new();
    for r in &corpus.records {
        if seen.insert(r.paper_id.as_str()) {
            groups.entry(r.field_id.as_str()).or_default().push(r.citations);
        }
    }
    let per_field: Vec<FieldBaseline> = groups
        .into_par_iter()
        .map(|(field, mut cites)| {
            cites.sort_unstable();
            baseline_from_sorted(cites, field)
        })
        .collect();
    Ok(BaselineSet {
        per_field: per_field.into_iter().map(|b| (b.field_id.clone(), b)).collect(),
        source_record_count: corpus.len(),
    })
}
