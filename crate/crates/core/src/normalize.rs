//! The six paper-level field normalization methods.
//!
//! Linear methods (mean-based, median-based, z-score) are affine in the raw
//! citation count; the nonlinear ones (percentile rank, NLCS, log z-score)
//! are not, which is what makes their sums and averages lossy.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::baselines::{BaselineSet, DegenerateFlag, FieldBaseline};
use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::numeric::fmt9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MethodId {
    MeanBased,
    MedianBased,
    ZScore,
    PercentileRank,
    Nlcs,
    LogZ,
}

impl MethodId {
    /// Every method, in export column order.
    pub const ALL: [MethodId; 6] = [
        MethodId::MeanBased,
        MethodId::MedianBased,
        MethodId::ZScore,
        MethodId::PercentileRank,
        MethodId::Nlcs,
        MethodId::LogZ,
    ];

    pub const LINEAR: [MethodId; 3] = [MethodId::MeanBased, MethodId::MedianBased, MethodId::ZScore];

    pub const NONLINEAR: [MethodId; 3] = [MethodId::PercentileRank, MethodId::Nlcs, MethodId::LogZ];

    pub fn is_linear(self) -> bool {
        matches!(self, MethodId::MeanBased | MethodId::MedianBased | MethodId::ZScore)
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MethodId::MeanBased => "MEAN_BASED",
            MethodId::MedianBased => "MEDIAN_BASED",
            MethodId::ZScore => "Z_SCORE",
            MethodId::PercentileRank => "PERCENTILE_RANK",
            MethodId::Nlcs => "NLCS",
            MethodId::LogZ => "LOG_Z",
        }
    }

    /// Scores one paper with this method.
    pub fn score(self, citations: u64, baseline: &FieldBaseline) -> Result<f64> {
        match self {
            MethodId::MeanBased => mean_based(citations, baseline),
            MethodId::MedianBased => median_based(citations, baseline),
            MethodId::ZScore => z_score(citations, baseline),
            MethodId::PercentileRank => Ok(percentile_rank(citations, baseline)),
            MethodId::Nlcs => nlcs(citations, baseline),
            MethodId::LogZ => log_z(citations, baseline),
        }
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MethodId {
    type Err = Error;

    /// Accepts the canonical names case-insensitively, with `-` or `_`.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        let m = match norm.as_str() {
            "MEAN_BASED" | "MEAN" | "MNCS" => MethodId::MeanBased,
            "MEDIAN_BASED" | "MEDIAN" => MethodId::MedianBased,
            "Z_SCORE" | "Z" | "ZSCORE" => MethodId::ZScore,
            "PERCENTILE_RANK" | "PERCENTILE" | "PR" => MethodId::PercentileRank,
            "NLCS" => MethodId::Nlcs,
            "LOG_Z" | "LOGZ" | "LOG_Z_SCORE" => MethodId::LogZ,
            _ => return Err(Error::UnknownSelector(s.to_string())),
        };
        Ok(m)
    }
}

/// Parses a comma-separated method list; `all` selects every method.
pub fn parse_method_list(s: &str) -> Result<Vec<MethodId>> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(MethodId::ALL.to_vec());
    }
    let mut out: Vec<MethodId> =
        s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// A value slot per method, indexed in [`MethodId::ALL`] order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MethodMap<T>([Option<T>; 6]);

impl<T> Default for MethodMap<T> {
    fn default() -> Self {
        MethodMap([None, None, None, None, None, None])
    }
}

impl<T> MethodMap<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, method: MethodId) -> Option<&T> {
        self.0[method.index()].as_ref()
    }

    pub fn insert(&mut self, method: MethodId, value: T) {
        self.0[method.index()] = Some(value);
    }

    pub fn contains(&self, method: MethodId) -> bool {
        self.0[method.index()].is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = (MethodId, &T)> {
        MethodId::ALL.iter().zip(self.0.iter()).filter_map(|(&m, v)| v.as_ref().map(|v| (m, v)))
    }

    pub fn methods(&self) -> Vec<MethodId> {
        self.iter().map(|(m, _)| m).collect()
    }

    pub fn len(&self) -> usize {
        self.0.iter().filter(|v| v.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn degenerate(b: &FieldBaseline, method: MethodId, flag: DegenerateFlag) -> Error {
    Error::DegenerateBaseline { field_id: b.field_id.clone(), method, flag, paper_id: None }
}

/// `x / m`.
pub fn mean_based(x: u64, b: &FieldBaseline) -> Result<f64> {
    if b.mean == 0.0 {
        // m = 0 exactly when every paper is uncited, i.e. when m_ln = 0
        return Err(degenerate(b, MethodId::MeanBased, DegenerateFlag::ZeroLogmean));
    }
    Ok(x as f64 / b.mean)
}

/// `x / M`.
pub fn median_based(x: u64, b: &FieldBaseline) -> Result<f64> {
    if b.median == 0.0 {
        return Err(degenerate(b, MethodId::MedianBased, DegenerateFlag::ZeroMedian));
    }
    Ok(x as f64 / b.median)
}

/// `(x - m) / sd`.
pub fn z_score(x: u64, b: &FieldBaseline) -> Result<f64> {
    if b.sd == 0.0 {
        return Err(degenerate(b, MethodId::ZScore, DegenerateFlag::ZeroSd));
    }
    Ok((x as f64 - b.mean) / b.sd)
}

/// Share of the field's papers cited at most `x` times, on a 0-100 scale.
/// Tied papers share the highest percentile of their group.
pub fn percentile_rank(x: u64, b: &FieldBaseline) -> f64 {
    let at_or_below = b.sorted_citations.partition_point(|&c| c <= x);
    100.0 * at_or_below as f64 / b.n as f64
}

/// `ln(x + 1) / m_ln`.
pub fn nlcs(x: u64, b: &FieldBaseline) -> Result<f64> {
    if b.log_mean == 0.0 {
        return Err(degenerate(b, MethodId::Nlcs, DegenerateFlag::ZeroLogmean));
    }
    Ok((x as f64).ln_1p() / b.log_mean)
}

/// `(ln(x + 1) - m_ln) / sd_ln`.
pub fn log_z(x: u64, b: &FieldBaseline) -> Result<f64> {
    if b.log_sd == 0.0 {
        return Err(degenerate(b, MethodId::LogZ, DegenerateFlag::ZeroLogsd));
    }
    Ok(((x as f64).ln_1p() - b.log_mean) / b.log_sd)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScoreRow {
    pub paper_id: String,
    pub institution_id: String,
    pub field_id: String,
    pub citations: u64,
    pub scores: MethodMap<f64>,
}

impl ScoreRow {
    pub fn score(&self, method: MethodId) -> Option<f64> {
        self.scores.get(method).copied()
    }
}

/// Scores every record of `corpus` against `baselines`, preserving record
/// order. The first failing record (in corpus order) determines the error.
pub fn score_corpus(corpus: &Corpus, baselines: &BaselineSet, methods: &[MethodId]) -> Result<Vec<ScoreRow>> {
    if methods.is_empty() {
        return Err(Error::InvalidConfig("no normalization methods selected".into()));
    }
    let rows: Vec<Result<ScoreRow>> = corpus
        .records
        .par_iter()
        .map(|r| {
            let b = baselines
                .get(&r.field_id)
                .ok_or_else(|| Error::MissingBaseline { field_id: r.field_id.clone(), paper_id: r.paper_id.clone() })?;
            let mut scores = MethodMap::new();
            for &m in methods {
                let y = m.score(r.citations, b).map_err(|e| match e {
                    Error::DegenerateBaseline { field_id, method, flag, .. } => {
                        Error::DegenerateBaseline { field_id, method, flag, paper_id: Some(r.paper_id.clone()) }
                    }
                    other => other,
                })?;
                scores.insert(m, y);
            }
            Ok(ScoreRow {
                paper_id: r.paper_id.clone(),
                institution_id: r.institution_id.clone(),
                field_id: r.field_id.clone(),
                citations: r.citations,
                scores,
            })
        })
        .collect();
    rows.into_iter().collect()
}

/// `paper_id,institution_id,field_id,citations,<method columns>`.
pub fn write_scores_csv<W: Write>(rows: &[ScoreRow], writer: W) -> Result<()> {
    let methods = rows.first().map(|r| r.scores.methods()).unwrap_or_default();
    let mut w = csv::Writer::from_writer(writer);
    let mut header = vec!["paper_id", "institution_id", "field_id", "citations"];
    header.extend(methods.iter().map(|m| m.as_str()));
    w.write_record(&header)?;
    for r in rows {
        let mut rec = vec![r.paper_id.clone(), r.institution_id.clone(), r.field_id.clone(), r.citations.to_string()];
        for &m in &methods {
            let v = r.score(m).ok_or_else(|| Error::MissingScore { paper_id: r.paper_id.clone(), method: m })?;
            rec.push(fmt9(v));
        }
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a score table written by [`write_scores_csv`].
pub fn read_scores_csv<R: Read>(reader: R) -> Result<Vec<ScoreRow>> {
    let mut rdr = csv::Reader::from_reader(reader);
    let header = rdr.headers()?.clone();
    if header.len() < 4 {
        return Err(Error::malformed(1, "header", "expected at least 4 columns"));
    }
    let methods: Vec<MethodId> = header.iter().skip(4).map(str::parse).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        let citations =
            rec[3].trim().parse().map_err(|_| Error::malformed(line, "citations", "not a base-10 integer"))?;
        let mut scores = MethodMap::new();
        for (i, &m) in methods.iter().enumerate() {
            let v: f64 = rec
                .get(4 + i)
                .ok_or_else(|| Error::malformed(line, m.as_str(), "missing column"))?
                .trim()
                .parse()
                .map_err(|_| Error::malformed(line, m.as_str(), "not a number"))?;
            scores.insert(m, v);
        }
        rows.push(ScoreRow {
            paper_id: rec[0].to_string(),
            institution_id: rec[1].to_string(),
            field_id: rec[2].to_string(),
            citations,
            scores,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baselines::{compute_baseline_set, compute_field_baseline};
    use crate::corpus::PaperRecord;

    fn field(c: &[u64]) -> FieldBaseline {
        compute_field_baseline(c, "F").unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn linearity_classification() {
        let linear: Vec<_> = MethodId::ALL.iter().filter(|m| m.is_linear()).copied().collect();
        assert_eq!(linear, MethodId::LINEAR);
        assert!(MethodId::NONLINEAR.iter().all(|m| !m.is_linear()));
    }

    #[test]
    fn mean_based_examples() {
        let b = field(&[24, 24]);
        assert_eq!(mean_based(24, &b).unwrap(), 1.0);
        assert_eq!(mean_based(0, &b).unwrap(), 0.0);
        assert_eq!(mean_based(6, &field(&[0, 2, 4, 6, 8])).unwrap(), 1.5);
        assert!(matches!(mean_based(1, &field(&[0, 0])), Err(Error::DegenerateBaseline { .. })));
    }

    #[test]
    fn median_based_examples() {
        let b = field(&[1, 3, 3, 9]);
        assert_eq!(median_based(3, &b).unwrap(), 1.0);
        assert_eq!(median_based(5, &field(&[1, 2, 3, 4])).unwrap(), 2.0);
        let err = median_based(5, &field(&[0, 0, 7])).unwrap_err();
        assert!(matches!(err, Error::DegenerateBaseline { flag: DegenerateFlag::ZeroMedian, .. }));
    }

    #[test]
    fn median_based_with_implied_physics_median() {
        // a field whose median is 11
        let b = field(&[0, 3, 11, 40, 90]);
        close(median_based(33, &b).unwrap(), 3.0, 0.003);
    }

    #[test]
    fn z_score_examples() {
        let b = field(&[2, 4, 6]);
        assert_eq!(z_score(4, &b).unwrap(), 0.0);
        close(z_score(6, &b).unwrap(), 1.224745, 5e-7);
        let b = field(&[0, 10]);
        // m = 5, sd = 5
        assert_eq!(z_score(10, &b).unwrap(), 1.0);
        assert!(matches!(
            z_score(1, &field(&[3, 3])),
            Err(Error::DegenerateBaseline { flag: DegenerateFlag::ZeroSd, .. })
        ));
    }

    #[test]
    fn percentile_examples() {
        let b = field(&[0, 1, 1, 3]);
        assert_eq!(percentile_rank(1, &b), 75.0);
        assert_eq!(percentile_rank(0, &b), 25.0);
        assert_eq!(percentile_rank(3, &b), 100.0);
        assert_eq!(percentile_rank(5, &field(&[5, 5, 5])), 100.0);
        // outside the baseline population
        assert_eq!(percentile_rank(2, &field(&[5, 6])), 0.0);
    }

    #[test]
    fn nlcs_examples() {
        let b = field(&[0, 1, 3]);
        assert_eq!(nlcs(0, &b).unwrap(), 0.0);
        close(nlcs(3, &b).unwrap(), 2.0, 1e-15);
        assert_eq!(nlcs(7, &field(&[7, 7, 7, 7, 7])).unwrap(), 1.0);
        assert!(matches!(
            nlcs(1, &field(&[0, 0])),
            Err(Error::DegenerateBaseline { flag: DegenerateFlag::ZeroLogmean, .. })
        ));
    }

    #[test]
    fn log_z_examples() {
        let b = field(&[0, 1, 3]);
        assert_eq!(log_z(1, &b).unwrap(), 0.0);
        close(log_z(3, &b).unwrap(), 1.224745, 5e-7);
        close(log_z(0, &b).unwrap(), -1.224745, 5e-7);
        assert!(matches!(
            log_z(1, &field(&[4])),
            Err(Error::DegenerateBaseline { flag: DegenerateFlag::ZeroLogsd, .. })
        ));
    }

    fn rec(p: &str, u: &str, f: &str, c: u64) -> PaperRecord {
        PaperRecord {
            paper_id: p.into(),
            institution_id: u.into(),
            field_id: f.into(),
            year: 2014,
            doc_type: "article".into(),
            citations: c,
        }
    }

    #[test]
    fn score_corpus_all_methods() {
        let c = Corpus::new(vec![rec("a", "u", "F", 1), rec("b", "u", "F", 5), rec("c", "v", "F", 2)]).unwrap();
        let set = compute_baseline_set(&c).unwrap();
        let rows = score_corpus(&c, &set, &MethodId::ALL).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.scores.len() == 6));
        assert_eq!(rows.iter().map(|r| r.paper_id.as_str()).collect::<Vec<_>>(), ["a", "b", "c"]);
    }

    #[test]
    fn score_corpus_missing_baseline() {
        let base = Corpus::new(vec![rec("a", "u", "F", 1), rec("b", "u", "F", 3)]).unwrap();
        let scored = Corpus::new(vec![rec("z", "u", "G", 1)]).unwrap();
        let set = compute_baseline_set(&base).unwrap();
        let err = score_corpus(&scored, &set, &MethodId::ALL).unwrap_err();
        assert!(matches!(err, Error::MissingBaseline { ref field_id, .. } if field_id == "G"));
    }

    #[test]
    fn score_corpus_against_superset_baseline() {
        let world = Corpus::new(vec![
            rec("a", "u", "F", 0),
            rec("b", "v", "F", 2),
            rec("c", "w", "F", 4),
            rec("d", "w", "F", 6),
            rec("e", "w", "F", 8),
        ])
        .unwrap();
        let sample = Corpus::new(vec![rec("d", "w", "F", 6)]).unwrap();
        let set = compute_baseline_set(&world).unwrap();
        let rows = score_corpus(&sample, &set, &[MethodId::MeanBased, MethodId::PercentileRank]).unwrap();
        assert_eq!(rows[0].score(MethodId::MeanBased), Some(1.5));
        assert_eq!(rows[0].score(MethodId::PercentileRank), Some(80.0));
    }

    #[test]
    fn degenerate_error_names_paper() {
        let c = Corpus::new(vec![rec("a", "u", "F", 0), rec("b", "u", "F", 0)]).unwrap();
        let set = compute_baseline_set(&c).unwrap();
        let err = score_corpus(&c, &set, &[MethodId::Nlcs]).unwrap_err();
        match err {
            Error::DegenerateBaseline { paper_id, method, .. } => {
                assert_eq!(paper_id.as_deref(), Some("a"));
                assert_eq!(method, MethodId::Nlcs);
            }
            other => panic!("unexpected {other:?}"),
        }
        // percentile rank stays defined
        assert!(score_corpus(&c, &set, &[MethodId::PercentileRank]).is_ok());
    }

    #[test]
    fn method_names_round_trip() {
        for m in MethodId::ALL {
            assert_eq!(m.as_str().parse::<MethodId>().unwrap(), m);
        }
        assert_eq!("mean-based".parse::<MethodId>().unwrap(), MethodId::MeanBased);
        assert!("bogus".parse::<MethodId>().is_err());
        assert_eq!(parse_method_list("all").unwrap(), MethodId::ALL);
        assert_eq!(parse_method_list("nlcs,MEAN_BASED,nlcs").unwrap(), vec![MethodId::MeanBased, MethodId::Nlcs]);
    }

    #[test]
    fn scores_csv_round_trip() {
        let c = Corpus::new(vec![rec("a", "u", "F", 1), rec("b", "u", "F", 5), rec("c", "v", "F", 2)]).unwrap();
        let set = compute_baseline_set(&c).unwrap();
        let rows = score_corpus(&c, &set, &[MethodId::ZScore, MethodId::PercentileRank]).unwrap();
        let mut buf = Vec::new();
        write_scores_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("paper_id,institution_id,field_id,citations,Z_SCORE,PERCENTILE_RANK\n"));
        let back = read_scores_csv(buf.as_slice()).unwrap();
        assert_eq!(back.len(), 3);
        for (a, b) in rows.iter().zip(&back) {
            assert_eq!(a.paper_id, b.paper_id);
            for m in [MethodId::ZScore, MethodId::PercentileRank] {
                let (x, y) = (a.score(m).unwrap(), b.score(m).unwrap());
                assert!((x - y).abs() <= 1e-8 * x.abs().max(1.0));
            }
        }
    }
}
