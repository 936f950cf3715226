//! Internal-consistency replay of published Physics ranking tables.
//!
//! The embedded rows carry averaged and summed scores for six methods,
//! together with their rank and rank-change columns. The replay checks that
//!
//! * (a) every sum agrees with `n` times the matching average, up to the
//!   slack introduced by printing averages to three decimals;
//! * (b) every rank-change column equals the method rank minus the raw
//!   citation rank;
//! * (c) the field mean and median implied by the linear columns are the
//!   same for every row;
//! * (d) the z-score and log z-score columns follow their formulas. They do
//!   not: both behave as if the subtracted field mean were zero. This is
//!   reported as a warning.

mod fixtures;

use std::fmt;

use serde::Serialize;

pub use fixtures::PHYSICS_TOP20;

/// One printed score with its rank and rank change.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Col {
    pub score: f64,
    pub rank: u32,
    pub change: i32,
}

/// Scores of one institution under one aggregation mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    /// Rank by raw citations (TC or TC average).
    pub rank0: u32,
    /// The same rank as printed in the appendix tables.
    pub rank0_appendix: u32,
    pub mean: Col,
    pub percentile: Col,
    pub nlcs: Col,
    pub log_z: Col,
    pub median: Col,
    pub z: Col,
}

impl TableRow {
    pub fn columns(&self) -> [(&'static str, Col); 6] {
        [
            ("MEAN_BASED", self.mean),
            ("MEDIAN_BASED", self.median),
            ("Z_SCORE", self.z),
            ("PERCENTILE_RANK", self.percentile),
            ("NLCS", self.nlcs),
            ("LOG_Z", self.log_z),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixtureRow {
    pub no: &'static str,
    pub name: &'static str,
    pub articles: u32,
    pub tc: u64,
    pub tc_ave: f64,
    pub average: TableRow,
    pub sum: TableRow,
}

/// Field mean implied by the mean-based columns.
pub const IMPLIED_MEAN: f64 = 23.82;
pub const IMPLIED_MEAN_TOL: f64 = 0.02;
/// Field median implied by the median-based columns.
pub const IMPLIED_MEDIAN: f64 = 11.00;
pub const IMPLIED_MEDIAN_TOL: f64 = 0.01;

/// Largest `|sum - n * average|` explained by rounding a printed average
/// to three decimals (plus rounding of the printed sum).
pub fn rounding_bound(n: u32) -> f64 {
    0.0005 * f64::from(n) + 0.005
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Warn,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Warn => "WARN",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    /// Check family: `a`, `b`, `c` or `d`.
    pub check: &'static str,
    /// Fixture row number, or `*` for checks spanning all rows.
    pub row: String,
    pub subject: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReplayReport {
    pub checks: Vec<Check>,
}

impl ReplayReport {
    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn count_in(&self, family: &str, status: Status) -> usize {
        self.checks.iter().filter(|c| c.check == family && c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }
}

impl fmt::Display for ReplayReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} ({}) row {} {}: {}", c.status, c.check, c.row, c.subject, c.detail)?;
        }
        write!(
            f,
            "{} checks: {} PASS, {} FAIL, {} WARN",
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Warn)
        )
    }
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Runs every check against `rows`.
pub fn replay_tables(rows: &[FixtureRow]) -> ReplayReport {
    let mut checks = Vec::new();
    check_sum_vs_average(rows, &mut checks);
    check_rank_changes(rows, &mut checks);
    check_implied_baselines(rows, &mut checks);
    check_centering(rows, &mut checks);
    ReplayReport { checks }
}

/// Replays the embedded Physics tables.
pub fn replay_paper_tables() -> ReplayReport {
    replay_tables(&PHYSICS_TOP20)
}

fn check_sum_vs_average(rows: &[FixtureRow], out: &mut Vec<Check>) {
    for row in rows {
        let n = f64::from(row.articles);
        let bound = rounding_bound(row.articles);
        let mut pairs = vec![("RAW".to_string(), row.tc as f64, row.tc_ave)];
        for ((name, s), (_, a)) in row.sum.columns().into_iter().zip(row.average.columns()) {
            pairs.push((name.to_string(), s.score, a.score));
        }
        for (subject, ap1, ap2) in pairs {
            let gap = (ap1 - n * ap2).abs();
            out.push(Check {
                check: "a",
                row: row.no.into(),
                subject,
                status: pass_if(gap <= bound),
                detail: format!("|{ap1} - {n} * {ap2}| = {gap:.3} (bound {bound:.4})"),
            });
        }
    }
}

fn check_rank_changes(rows: &[FixtureRow], out: &mut Vec<Check>) {
    for row in rows {
        for (mode, table) in [("average", &row.average), ("sum", &row.sum)] {
            out.push(Check {
                check: "b",
                row: row.no.into(),
                subject: format!("{mode} RAW"),
                status: pass_if(table.rank0 == table.rank0_appendix),
                detail: format!("rank {} in both tables (appendix {})", table.rank0, table.rank0_appendix),
            });
            for (name, col) in table.columns() {
                let expected = i64::from(col.rank) - i64::from(table.rank0);
                out.push(Check {
                    check: "b",
                    row: row.no.into(),
                    subject: format!("{mode} {name}"),
                    status: pass_if(expected == i64::from(col.change)),
                    detail: format!("{} - {} = {expected}, printed {}", col.rank, table.rank0, col.change),
                });
            }
        }
    }
}

fn check_implied_baselines(rows: &[FixtureRow], out: &mut Vec<Check>) {
    type Ratio = fn(&FixtureRow) -> f64;
    let specs: [(&str, Ratio, f64, f64); 4] = [
        ("implied m (average)", |r| r.tc_ave / r.average.mean.score, IMPLIED_MEAN, IMPLIED_MEAN_TOL),
        ("implied m (sum)", |r| r.tc as f64 / r.sum.mean.score, IMPLIED_MEAN, IMPLIED_MEAN_TOL),
        ("implied M (average)", |r| r.tc_ave / r.average.median.score, IMPLIED_MEDIAN, IMPLIED_MEDIAN_TOL),
        ("implied M (sum)", |r| r.tc as f64 / r.sum.median.score, IMPLIED_MEDIAN, IMPLIED_MEDIAN_TOL),
    ];
    for (subject, ratio, anchor, tol) in specs {
        let values: Vec<f64> = rows.iter().map(ratio).collect();
        for (row, &v) in rows.iter().zip(&values) {
            out.push(Check {
                check: "c",
                row: row.no.into(),
                subject: subject.into(),
                status: pass_if((v - anchor).abs() <= tol),
                detail: format!("{v:.4} vs {anchor} +/- {tol}"),
            });
        }
        let (lo, hi) = min_max(&values);
        out.push(Check {
            check: "c",
            row: "*".into(),
            subject: format!("{subject} spread"),
            status: pass_if(hi - lo <= 2.0 * tol),
            detail: format!("range [{lo:.4}, {hi:.4}] across {} rows", values.len()),
        });
    }
}

fn min_max(values: &[f64]) -> (f64, f64) {
    values.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)))
}

/// Least-squares line `y = slope * x + intercept`.
fn fit_line(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

fn check_centering(rows: &[FixtureRow], out: &mut Vec<Check>) {
    // z average = (TC average - m) / sd, so the intercept over the slope
    // recovers -m.
    let tc_ave: Vec<f64> = rows.iter().map(|r| r.tc_ave).collect();
    let z_ave: Vec<f64> = rows.iter().map(|r| r.average.z.score).collect();
    let (slope, intercept) = fit_line(&tc_ave, &z_ave);
    let implied_m = -intercept / slope;
    let implied_sd = 1.0 / slope;
    let sum_sd: Vec<f64> = rows.iter().map(|r| r.tc as f64 / r.sum.z.score).collect();
    let (lo, hi) = min_max(&sum_sd);
    let centred = (implied_m - IMPLIED_MEAN).abs() <= 1.0;
    out.push(Check {
        check: "d",
        row: "*".into(),
        subject: "Z_SCORE centring".into(),
        status: if centred { Status::Pass } else { Status::Warn },
        detail: format!(
            "z columns imply m = {implied_m:.3}, sd = {implied_sd:.3} (mean-based columns imply m = {IMPLIED_MEAN}); \
             TC / summed z lies in [{lo:.2}, {hi:.2}], i.e. sums behave as TC / sd"
        ),
    });

    // log z = (m_ln / sd_ln) * (NLCS - 1): intercept should equal -slope.
    let nlcs: Vec<f64> = rows.iter().map(|r| r.average.nlcs.score).collect();
    let log_z: Vec<f64> = rows.iter().map(|r| r.average.log_z.score).collect();
    let (slope, intercept) = fit_line(&nlcs, &log_z);
    let centred = (intercept + slope).abs() <= 0.1 * slope.abs();
    out.push(Check {
        check: "d",
        row: "*".into(),
        subject: "LOG_Z centring".into(),
        status: if centred { Status::Pass } else { Status::Warn },
        detail: format!("log z = {slope:.4} * NLCS + {intercept:.4}; centred log z would have intercept {:.4}", -slope),
    });
}
