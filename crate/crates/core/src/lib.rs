//! Field normalization of citation counts and institution-level
//! aggregation, with the statistics used to compare the resulting rankings.
//!
//! The stages are independent modules: [`corpus`] (ingestion and
//! filtering), [`baselines`] (per-field statistics), [`normalize`]
//! (per-paper scores), [`aggregate`] (institution sums and averages),
//! [`analyze`] (correlations and rank shifts) and [`synth`] (reproducible
//! synthetic corpora). [`pipeline`] chains them.

pub mod aggregate;
pub mod analyze;
pub mod baselines;
pub mod corpus;
pub mod error;
pub mod normalize;
pub mod numeric;
pub mod pipeline;
pub mod plot;
pub mod replay;
pub mod synth;

pub use aggregate::{aggregate_all, aggregate_institution, InstitutionAggregate, MethodAggregate, Metric, Mode};
pub use analyze::{
    assign_ranks, corr_p_value, correlation_report, pearson, rank_shift, spearman, CorrelationPair, CorrelationReport,
    RankShiftRow, RankTable,
};
pub use baselines::{compute_baseline_set, compute_field_baseline, BaselineSet, DegenerateFlag, FieldBaseline};
pub use corpus::{apply_filters, load_corpus, Corpus, FilterSpec, InputFormat, PaperRecord};
pub use error::{Error, Result};
pub use normalize::{score_corpus, MethodId, MethodMap, ScoreRow};
pub use pipeline::{run_pipeline, run_pipeline_on_corpora, PipelineConfig, PipelineOutput};
pub use plot::{emit_plot_data, PlotAxis, PlotPoint};
pub use replay::{replay_paper_tables, ReplayReport};
pub use synth::{generate_corpus, SynthConfig, SynthField};
