use serde::Serialize;
use serde_json::value::RawValue;

use super::correlation::{corr_p_value, pearson, spearman};
use super::ranking::{assign_ranks, RankTable};
use crate::aggregate::{InstitutionAggregate, Metric, Mode};
use crate::error::{Error, Result};
use crate::numeric::{fmt9, format_sci, SIG_DIGITS};

#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationPair {
    pub metric_a: Metric,
    pub metric_b: Metric,
    pub n: usize,
    pub r: f64,
    pub p_r: f64,
    pub rho: f64,
    pub p_rho: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationReport {
    pub mode: Mode,
    pub benchmark: Metric,
    pub pairs: Vec<CorrelationPair>,
}

impl CorrelationReport {
    pub fn pair(&self, metric: Metric) -> Option<&CorrelationPair> {
        self.pairs.iter().find(|p| p.metric_b == metric)
    }

    /// Pretty-printed JSON. Coefficients carry nine significant digits and
    /// p-values are written in scientific notation.
    pub fn to_json(&self) -> Result<String> {
        #[derive(Serialize)]
        struct PairJson<'a> {
            metric: &'a str,
            n: usize,
            r: Box<RawValue>,
            p_r: Box<RawValue>,
            rho: Box<RawValue>,
            p_rho: Box<RawValue>,
        }
        #[derive(Serialize)]
        struct ReportJson<'a> {
            mode: &'a str,
            benchmark: &'a str,
            pairs: Vec<PairJson<'a>>,
        }
        let raw = |s: String| RawValue::from_string(s).map_err(Error::from);
        let pairs = self
            .pairs
            .iter()
            .map(|p| {
                Ok(PairJson {
                    metric: p.metric_b.label(),
                    n: p.n,
                    r: raw(fmt9(p.r))?,
                    p_r: raw(format_sci(p.p_r, SIG_DIGITS))?,
                    rho: raw(fmt9(p.rho))?,
                    p_rho: raw(format_sci(p.p_rho, SIG_DIGITS))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let doc = ReportJson { mode: self.mode.as_str(), benchmark: self.benchmark.label(), pairs };
        Ok(serde_json::to_string_pretty(&doc)?)
    }
}

fn column(aggregates: &[InstitutionAggregate], metric: Metric, mode: Mode) -> Result<Vec<f64>> {
    aggregates
        .iter()
        .map(|a| {
            a.value(metric, mode)
                .ok_or_else(|| Error::UnknownSelector(format!("{metric} (not aggregated for `{}`)", a.institution_id)))
        })
        .collect()
}

/// Correlates `benchmark` with each of `metrics` across institutions, using
/// totals under [`Mode::Sum`] and averages under [`Mode::Average`].
pub fn correlation_report(
    aggregates: &[InstitutionAggregate],
    benchmark: Metric,
    metrics: &[Metric],
    mode: Mode,
) -> Result<CorrelationReport> {
    let n = aggregates.len();
    if n < 3 {
        return Err(Error::TooFewObservations { needed: 3, got: n });
    }
    let bench = column(aggregates, benchmark, mode)?;
    let pairs = metrics
        .iter()
        .map(|&metric| {
            let values = column(aggregates, metric, mode)?;
            let relabel = |e: Error| match e {
                Error::ConstantInput { .. } => {
                    Error::ConstantInput { label: format!("{mode} {benchmark} vs {metric}") }
                }
                other => other,
            };
            let r = pearson(&bench, &values).map_err(relabel)?;
            let rho = spearman(&bench, &values).map_err(relabel)?;
            Ok(CorrelationPair {
                metric_a: benchmark,
                metric_b: metric,
                n,
                r,
                p_r: corr_p_value(r, n)?,
                rho,
                p_rho: corr_p_value(rho, n)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CorrelationReport { mode, benchmark, pairs })
}

/// Competition-ranks institutions by `metric` under `mode`.
pub fn rank_table_for(aggregates: &[InstitutionAggregate], metric: Metric, mode: Mode) -> Result<RankTable> {
    let values = column(aggregates, metric, mode)?;
    let ids: Vec<&str> = aggregates.iter().map(|a| a.institution_id.as_str()).collect();
    assign_ranks(&values, &ids)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aggregate::MethodAggregate;
    use crate::normalize::{MethodId, MethodMap};

    fn agg(id: &str, n: usize, tc: u64, mean_ap1: f64) -> InstitutionAggregate {
        let mut per_method = MethodMap::new();
        per_method.insert(MethodId::MeanBased, MethodAggregate { ap1: mean_ap1, ap2: mean_ap1 / n as f64 });
        InstitutionAggregate {
            institution_id: id.into(),
            n_papers: n,
            tc_sum: tc,
            tc_ave: tc as f64 / n as f64,
            per_method,
        }
    }

    #[test]
    fn proportional_metric_is_perfect() {
        let aggs = vec![agg("a", 10, 100, 50.0), agg("b", 20, 50, 25.0), agg("c", 5, 300, 150.0)];
        let rep = correlation_report(&aggs, Metric::Raw, &[MethodId::MeanBased.into()], Mode::Sum).unwrap();
        let p = &rep.pairs[0];
        assert!((p.r - 1.0).abs() < 1e-15);
        assert_eq!(p.rho, 1.0);
        assert_eq!(p.n, 3);
    }

    #[test]
    fn self_correlation() {
        let aggs = vec![agg("a", 10, 100, 50.0), agg("b", 20, 50, 25.0), agg("c", 5, 300, 150.0)];
        let rep = correlation_report(&aggs, Metric::Raw, &[Metric::Raw], Mode::Average).unwrap();
        assert_eq!((rep.pairs[0].r, rep.pairs[0].rho), (1.0, 1.0));
        assert_eq!(rep.pairs[0].p_r, 0.0);
    }

    #[test]
    fn constant_metric_is_labelled() {
        let aggs = vec![agg("a", 10, 100, 5.0), agg("b", 10, 50, 5.0), agg("c", 10, 300, 5.0)];
        let err = correlation_report(&aggs, Metric::Raw, &[MethodId::MeanBased.into()], Mode::Sum).unwrap_err();
        match err {
            Error::ConstantInput { label } => assert_eq!(label, "SUM RAW vs MEAN_BASED"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn too_few_and_unknown() {
        let aggs = vec![agg("a", 10, 100, 5.0), agg("b", 10, 50, 4.0)];
        assert!(matches!(
            correlation_report(&aggs, Metric::Raw, &[Metric::Raw], Mode::Sum),
            Err(Error::TooFewObservations { .. })
        ));
        let aggs = vec![agg("a", 10, 100, 5.0), agg("b", 10, 50, 4.0), agg("c", 1, 1, 1.0)];
        assert!(matches!(
            correlation_report(&aggs, Metric::Raw, &[MethodId::Nlcs.into()], Mode::Sum),
            Err(Error::UnknownSelector(_))
        ));
    }

    #[test]
    fn json_layout() {
        let aggs = vec![agg("a", 10, 100, 50.0), agg("b", 20, 60, 25.0), agg("c", 5, 300, 170.0), agg("d", 5, 10, 1.0)];
        let rep = correlation_report(&aggs, Metric::Raw, &[MethodId::MeanBased.into()], Mode::Sum).unwrap();
        let json = rep.to_json().unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["mode"], "SUM");
        assert_eq!(v["benchmark"], "RAW");
        assert_eq!(v["pairs"][0]["metric"], "MEAN_BASED");
        assert_eq!(v["pairs"][0]["n"], 4);
        assert!(json.contains("\"p_r\": ") && json.contains('e'));
        let p = v["pairs"][0]["p_r"].as_f64().unwrap();
        assert!((p - rep.pairs[0].p_r).abs() <= 1e-8 * rep.pairs[0].p_r);
    }
}
