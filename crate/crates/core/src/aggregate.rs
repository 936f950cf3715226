//! Institution-level totals (AP1) and averages (AP2) of paper scores.

use std::borrow::Borrow;
use std::collections::BTreeMap;
use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::baselines::BaselineSet;
use crate::error::{Error, Result};
use crate::normalize::{MethodId, MethodMap, ScoreRow};
use crate::numeric::{fmt9, FactoredProduct, NeumaierSum};

/// How paper scores are combined into an institution score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Mode {
    /// AP1, the plain sum.
    Sum,
    /// AP2, the sum divided by the paper count.
    Average,
}

impl Mode {
    pub const BOTH: [Mode; 2] = [Mode::Sum, Mode::Average];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Sum => "SUM",
            Mode::Average => "AVERAGE",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sum" | "ap1" => Ok(Mode::Sum),
            "average" | "avg" | "mean" | "ap2" => Ok(Mode::Average),
            _ => Err(Error::UnknownSelector(s.to_string())),
        }
    }
}

/// Parses `sum`, `average` or `both`.
pub fn parse_modes(s: &str) -> Result<Vec<Mode>> {
    if s.trim().eq_ignore_ascii_case("both") {
        return Ok(Mode::BOTH.to_vec());
    }
    Ok(vec![s.parse()?])
}

/// An institution-level indicator: raw citations or a normalization method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Metric {
    Raw,
    Method(MethodId),
}

impl Metric {
    pub fn label(self) -> &'static str {
        match self {
            Metric::Raw => "RAW",
            Metric::Method(m) => m.as_str(),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if ["raw", "tc", "citations"].iter().any(|k| t.eq_ignore_ascii_case(k)) {
            Ok(Metric::Raw)
        } else {
            Ok(Metric::Method(t.parse()?))
        }
    }
}

impl From<MethodId> for Metric {
    fn from(m: MethodId) -> Self {
        Metric::Method(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MethodAggregate {
    pub ap1: f64,
    pub ap2: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InstitutionAggregate {
    pub institution_id: String,
    pub n_papers: usize,
    pub tc_sum: u64,
    pub tc_ave: f64,
    pub per_method: MethodMap<MethodAggregate>,
}

impl InstitutionAggregate {
    /// The value of `metric` under `mode`: TC / TC(ave) for raw citations,
    /// AP1 / AP2 for a method.
    pub fn value(&self, metric: Metric, mode: Mode) -> Option<f64> {
        match (metric, mode) {
            (Metric::Raw, Mode::Sum) => Some(self.tc_sum as f64),
            (Metric::Raw, Mode::Average) => Some(self.tc_ave),
            (Metric::Method(m), Mode::Sum) => self.per_method.get(m).map(|a| a.ap1),
            (Metric::Method(m), Mode::Average) => self.per_method.get(m).map(|a| a.ap2),
        }
    }
}

/// Aggregates the rows of a single institution.
///
/// Scores are summed in ascending `paper_id` order with compensated
/// summation, and every average is the corresponding sum divided by `n`.
pub fn aggregate_institution<R: Borrow<ScoreRow>>(rows: &[R], methods: &[MethodId]) -> Result<InstitutionAggregate> {
    aggregate_impl(rows, methods, None)
}

/// Like [`aggregate_institution`], but every method that is affine in a
/// per-paper statistic is evaluated from that statistic's field total `S_f`:
/// AP1 adds `T_f(S_f)` and AP2 adds `(n_f / n) T_f(S_f / n_f)` over fields.
/// The statistic is the citation count for the linear methods and
/// ln(citations + 1) for NLCS and log z, whose total is taken from the
/// factored product of `citations + 1`.
///
/// Institutions with equal totals (equal averages, for AP2) in a field thus
/// get bitwise-equal aggregates, and NLCS and log z order them identically.
/// Per-paper summation can split such ties by an ulp. Results agree with
/// [`aggregate_institution`] up to rounding, and AP1 = n AP2 holds to a few
/// ulps rather than bitwise. Percentile rank is always summed per paper.
pub fn aggregate_institution_with_baselines<R: Borrow<ScoreRow>>(
    rows: &[R],
    methods: &[MethodId],
    baselines: &BaselineSet,
) -> Result<InstitutionAggregate> {
    aggregate_impl(rows, methods, Some(baselines))
}

fn aggregate_impl<R: Borrow<ScoreRow>>(
    rows: &[R],
    methods: &[MethodId],
    baselines: Option<&BaselineSet>,
) -> Result<InstitutionAggregate> {
    let first = rows.first().ok_or(Error::EmptyInstitution)?.borrow();
    let institution = &first.institution_id;
    let mut order: Vec<&ScoreRow> = Vec::with_capacity(rows.len());
    for r in rows {
        let r = r.borrow();
        if r.institution_id != *institution {
            return Err(Error::HeterogeneousRows { expected: institution.clone(), found: r.institution_id.clone() });
        }
        order.push(r);
    }
    order.sort_by(|a, b| a.paper_id.cmp(&b.paper_id));

    let n = order.len();
    let tc_sum: u64 = order.iter().map(|r| r.citations).sum();
    let needs_logs = methods.iter().any(|m| matches!(m, MethodId::Nlcs | MethodId::LogZ));
    let field_totals = baselines.map(|_| {
        let mut totals: BTreeMap<&str, FieldTotal> = BTreeMap::new();
        for r in &order {
            let e = totals.entry(r.field_id.as_str()).or_default();
            e.citations += r.citations;
            e.papers += 1;
            if needs_logs {
                e.log_product.mul(r.citations + 1);
            }
        }
        totals
    });
    let mut per_method = MethodMap::new();
    for &m in methods {
        for r in &order {
            if !r.scores.contains(m) {
                return Err(Error::MissingScore { paper_id: r.paper_id.clone(), method: m });
            }
        }
        let agg = match (baselines, &field_totals) {
            (Some(b), Some(totals)) if m != MethodId::PercentileRank => from_field_totals(m, totals, n, b)?,
            _ => {
                let ap1: f64 = order.iter().filter_map(|r| r.score(m)).collect::<NeumaierSum>().total();
                MethodAggregate { ap1, ap2: ap1 / n as f64 }
            }
        };
        per_method.insert(m, agg);
    }
    Ok(InstitutionAggregate {
        institution_id: institution.clone(),
        n_papers: n,
        tc_sum,
        tc_ave: tc_sum as f64 / n as f64,
        per_method,
    })
}

#[derive(Default)]
struct FieldTotal {
    citations: u64,
    papers: usize,
    /// Product of `citations + 1` over the field's papers.
    log_product: FactoredProduct,
}

/// Every method except percentile rank is affine in a per-paper statistic
/// (citations, or ln(citations + 1)) within a field, so its sum over a
/// field is the transform applied to the field's total of that statistic.
fn from_field_totals(
    m: MethodId,
    totals: &BTreeMap<&str, FieldTotal>,
    n: usize,
    baselines: &BaselineSet,
) -> Result<MethodAggregate> {
    let mut ap1 = NeumaierSum::new();
    let mut ap2 = NeumaierSum::new();
    for (&field, t) in totals {
        let b = baselines
            .get(field)
            .ok_or_else(|| Error::MissingBaseline { field_id: field.to_string(), paper_id: String::new() })?;
        // surfaces degenerate baselines exactly as per-paper scoring would
        m.score(0, b)?;
        let (stat, offset, scale) = match m {
            MethodId::MeanBased => (t.citations as f64, 0.0, b.mean),
            MethodId::MedianBased => (t.citations as f64, 0.0, b.median),
            MethodId::ZScore => (t.citations as f64, b.mean, b.sd),
            MethodId::Nlcs => (t.log_product.ln(), 0.0, b.log_mean),
            MethodId::LogZ => (t.log_product.ln(), b.log_mean, b.log_sd),
            MethodId::PercentileRank => unreachable!("percentile rank has no field total"),
        };
        let k = t.papers as f64;
        ap1.add((stat - k * offset) / scale);
        ap2.add(k / n as f64 * ((stat / k - offset) / scale));
    }
    Ok(MethodAggregate { ap1: ap1.total(), ap2: ap2.total() })
}

/// One aggregate per institution, sorted by institution id. The methods
/// aggregated are those scored on the first row.
pub fn aggregate_all(rows: &[ScoreRow]) -> Result<Vec<InstitutionAggregate>> {
    aggregate_all_impl(rows, None)
}

/// [`aggregate_all`] with linear methods taken from field citation totals;
/// see [`aggregate_institution_with_baselines`].
pub fn aggregate_all_with_baselines(rows: &[ScoreRow], baselines: &BaselineSet) -> Result<Vec<InstitutionAggregate>> {
    aggregate_all_impl(rows, Some(baselines))
}

fn aggregate_all_impl(rows: &[ScoreRow], baselines: Option<&BaselineSet>) -> Result<Vec<InstitutionAggregate>> {
    let Some(first) = rows.first() else {
        return Ok(Vec::new());
    };
    let methods = first.scores.methods();
    let mut groups: BTreeMap<&str, Vec<&ScoreRow>> = BTreeMap::new();
    for r in rows {
        groups.entry(r.institution_id.as_str()).or_default().push(r);
    }
    let groups: Vec<Vec<&ScoreRow>> = groups.into_values().collect();
    groups.par_iter().map(|g| aggregate_impl(g, &methods, baselines)).collect::<Vec<_>>().into_iter().collect()
}

/// Methods aggregated in a table, taken from its first entry.
pub fn aggregated_methods(aggregates: &[InstitutionAggregate]) -> Vec<MethodId> {
    aggregates.first().map(|a| a.per_method.methods()).unwrap_or_default()
}

/// `institution_id,n_papers,tc_sum,tc_ave`, then `<METHOD>_ap1,<METHOD>_ap2`
/// per method.
pub fn write_aggregates_csv<W: Write>(aggregates: &[InstitutionAggregate], writer: W) -> Result<()> {
    let methods = aggregated_methods(aggregates);
    let mut w = csv::Writer::from_writer(writer);
    let mut header: Vec<String> =
        ["institution_id", "n_papers", "tc_sum", "tc_ave"].iter().map(|s| s.to_string()).collect();
    for m in &methods {
        header.push(format!("{m}_ap1"));
        header.push(format!("{m}_ap2"));
    }
    w.write_record(&header)?;
    for a in aggregates {
        let mut rec = vec![a.institution_id.clone(), a.n_papers.to_string(), a.tc_sum.to_string(), fmt9(a.tc_ave)];
        for &m in &methods {
            let agg = a
                .per_method
                .get(m)
                .ok_or_else(|| Error::MissingScore { paper_id: a.institution_id.clone(), method: m })?;
            rec.push(fmt9(agg.ap1));
            rec.push(fmt9(agg.ap2));
        }
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_aggregates_csv<R: Read>(reader: R) -> Result<Vec<InstitutionAggregate>> {
    let mut rdr = csv::Reader::from_reader(reader);
    let header = rdr.headers()?.clone();
    let mut methods = Vec::new();
    for (i, col) in header.iter().enumerate().skip(4) {
        let Some(name) = col.strip_suffix("_ap1") else {
            continue;
        };
        let m: MethodId = name.parse()?;
        if header.get(i + 1) != Some(format!("{name}_ap2").as_str()) {
            return Err(Error::malformed(1, col, "ap1 column without a matching ap2 column"));
        }
        methods.push((m, i));
    }
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        let num = |i: usize, key: &str| -> Result<f64> {
            rec.get(i)
                .ok_or_else(|| Error::malformed(line, key, "missing column"))?
                .trim()
                .parse()
                .map_err(|_| Error::malformed(line, key, "not a number"))
        };
        let mut per_method = MethodMap::new();
        for &(m, i) in &methods {
            per_method.insert(m, MethodAggregate { ap1: num(i, &header[i])?, ap2: num(i + 1, &header[i + 1])? });
        }
        out.push(InstitutionAggregate {
            institution_id: rec[0].to_string(),
            n_papers: rec[1].trim().parse().map_err(|_| Error::malformed(line, "n_papers", "not an integer"))?,
            tc_sum: rec[2].trim().parse().map_err(|_| Error::malformed(line, "tc_sum", "not an integer"))?,
            tc_ave: num(3, "tc_ave")?,
            per_method,
        });
    }
    Ok(out)
}
