//! Correlation, ranking and rank-shift analysis between institution-level
//! indicators.

mod correlation;
mod ranking;
mod report;

pub use correlation::{average_ranks, corr_p_value, pearson, spearman};
pub use ranking::{assign_ranks, rank_shift, write_rank_shift_csv, RankEntry, RankShiftRow, RankTable};
pub use report::{correlation_report, rank_table_for, CorrelationPair, CorrelationReport};
