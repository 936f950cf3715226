//! Scatter series for external plotting tools.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use crate::aggregate::{InstitutionAggregate, Metric, Mode};
use crate::analyze::rank_table_for;
use crate::error::{Error, Result};
use crate::numeric::fmt9;

/// A plot axis: a metric's aggregate value, or its competition rank when
/// written as `rank(metric)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlotAxis {
    pub metric: Metric,
    pub ranked: bool,
}

impl FromStr for PlotAxis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        if let Some(inner) = lower.strip_prefix("rank(").and_then(|r| r.strip_suffix(')')) {
            return Ok(PlotAxis { metric: inner.parse()?, ranked: true });
        }
        Ok(PlotAxis { metric: t.parse()?, ranked: false })
    }
}

impl fmt::Display for PlotAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ranked {
            write!(f, "rank({})", self.metric)
        } else {
            write!(f, "{}", self.metric)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotPoint {
    pub institution_id: String,
    pub x: f64,
    pub y: f64,
}

fn axis_values(aggregates: &[InstitutionAggregate], axis: PlotAxis, mode: Mode) -> Result<Vec<f64>> {
    if axis.ranked {
        let table = rank_table_for(aggregates, axis.metric, mode)?;
        let ranks = table.ranks();
        Ok(aggregates.iter().map(|a| ranks[a.institution_id.as_str()] as f64).collect())
    } else {
        aggregates
            .iter()
            .map(|a| {
                a.value(axis.metric, mode)
                    .ok_or_else(|| Error::UnknownSelector(format!("{} (not aggregated)", axis.metric)))
            })
            .collect()
    }
}

/// One point per institution, in aggregate order.
pub fn emit_plot_data(
    aggregates: &[InstitutionAggregate],
    x: PlotAxis,
    y: PlotAxis,
    mode: Mode,
) -> Result<Vec<PlotPoint>> {
    let xs = axis_values(aggregates, x, mode)?;
    let ys = axis_values(aggregates, y, mode)?;
    Ok(aggregates
        .iter()
        .zip(xs.into_iter().zip(ys))
        .map(|(a, (x, y))| PlotPoint { institution_id: a.institution_id.clone(), x, y })
        .collect())
}

pub fn write_plot_csv<W: Write>(points: &[PlotPoint], writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["institution_id", "x", "y"])?;
    for p in points {
        w.write_record([p.institution_id.clone(), fmt9(p.x), fmt9(p.y)])?;
    }
    w.flush()?;
    Ok(())
}
