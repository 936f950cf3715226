//! End-to-end run: load, filter, baselines, score, aggregate, analyze.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::aggregate::{aggregate_all_with_baselines, write_aggregates_csv, InstitutionAggregate, Metric, Mode};
use crate::analyze::{
    correlation_report, rank_shift, rank_table_for, write_rank_shift_csv, CorrelationReport, RankShiftRow,
};
use crate::baselines::{compute_baseline_set, BaselineSet};
use crate::corpus::{apply_filters, load_corpus, Corpus, FilterSpec, InputFormat};
use crate::error::{Error, Result};
use crate::normalize::{score_corpus, write_scores_csv, MethodId, ScoreRow};

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineConfig {
    pub baseline_input: PathBuf,
    /// May equal `baseline_input`.
    pub score_input: PathBuf,
    pub format: InputFormat,
    pub filters: FilterSpec,
    pub methods: Vec<MethodId>,
    pub benchmark: Metric,
    pub modes: Vec<Mode>,
    pub output_dir: PathBuf,
}

/// Checks the parts of a configuration that do not touch the filesystem.
pub fn validate_analysis(filters: &FilterSpec, methods: &[MethodId], benchmark: Metric, modes: &[Mode]) -> Result<()> {
    if methods.is_empty() {
        return Err(Error::InvalidConfig("no normalization methods selected".into()));
    }
    if modes.is_empty() {
        return Err(Error::InvalidConfig("no aggregation modes selected".into()));
    }
    if let Metric::Method(m) = benchmark {
        if !m.is_linear() {
            return Err(Error::InvalidConfig(format!("benchmark {m} is not RAW or a linear method")));
        }
        if !methods.contains(&m) {
            return Err(Error::InvalidConfig(format!("benchmark {m} is not among the selected methods")));
        }
    }
    filters.validate()
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<()> {
        validate_analysis(&self.filters, &self.methods, self.benchmark, &self.modes)
    }
}

/// Everything a pipeline run produces, before it is written out.
#[derive(Debug, Clone)]
pub struct PipelineOutput {
    pub baselines: BaselineSet,
    pub scores: Vec<ScoreRow>,
    pub aggregates: Vec<InstitutionAggregate>,
    pub reports: Vec<CorrelationReport>,
    /// `(mode, method, rows)` for every selected method other than the benchmark.
    pub rank_shifts: Vec<(Mode, MethodId, Vec<RankShiftRow>)>,
}

impl PipelineOutput {
    pub fn report(&self, mode: Mode) -> Option<&CorrelationReport> {
        self.reports.iter().find(|r| r.mode == mode)
    }

    /// Writes all artifacts into `dir` and returns their paths in write order.
    pub fn write_to(&self, dir: &Path) -> Result<Vec<PathBuf>> {
        fs::create_dir_all(dir)?;
        let mut written = Vec::new();
        let mut emit = |name: String, f: &dyn Fn(&mut BufWriter<File>) -> Result<()>| -> Result<()> {
            let path = dir.join(name);
            let mut w = BufWriter::new(File::create(&path)?);
            f(&mut w)?;
            w.flush()?;
            written.push(path);
            Ok(())
        };
        emit("baselines.csv".into(), &|w| self.baselines.write_csv(w))?;
        emit("scores.csv".into(), &|w| write_scores_csv(&self.scores, w))?;
        emit("aggregates.csv".into(), &|w| write_aggregates_csv(&self.aggregates, w))?;
        for report in &self.reports {
            let name = format!("correlation_{}.json", report.mode.as_str().to_ascii_lowercase());
            emit(name, &|w| {
                let json = report.to_json()?;
                writeln!(w, "{json}")?;
                Ok(())
            })?;
        }
        for (mode, method, rows) in &self.rank_shifts {
            let name = format!(
                "rankshift_{}_{}.csv",
                mode.as_str().to_ascii_lowercase(),
                method.as_str().to_ascii_lowercase()
            );
            emit(name, &|w| write_rank_shift_csv(rows, w))?;
        }
        Ok(written)
    }
}

/// Runs the analysis on corpora already in memory. Baselines come from
/// `baseline_corpus` restricted by the population part of `filters`
/// (document types, years, fields); scoring uses `score_corpus` under the
/// full filter.
pub fn run_pipeline_on_corpora(
    baseline_corpus: &Corpus,
    scored_corpus: &Corpus,
    filters: &FilterSpec,
    methods: &[MethodId],
    benchmark: Metric,
    modes: &[Mode],
) -> Result<PipelineOutput> {
    validate_analysis(filters, methods, benchmark, modes)?;
    let population = filters.population_part();
    let base = if population.is_identity() { None } else { Some(apply_filters(baseline_corpus, &population)?) };
    let baselines = compute_baseline_set(base.as_ref().unwrap_or(baseline_corpus))?;
    drop(base);

    let scored = if filters.is_identity() { None } else { Some(apply_filters(scored_corpus, filters)?) };
    let scores = score_corpus(scored.as_ref().unwrap_or(scored_corpus), &baselines, methods)?;
    drop(scored);
    let aggregates = aggregate_all_with_baselines(&scores, &baselines)?;

    let mut metrics = vec![Metric::Raw];
    metrics.extend(methods.iter().map(|&m| Metric::Method(m)));
    metrics.retain(|&m| m != benchmark);

    let mut reports = Vec::with_capacity(modes.len());
    let mut rank_shifts = Vec::new();
    for &mode in modes {
        reports.push(correlation_report(&aggregates, benchmark, &metrics, mode)?);
        let bench_ranks = rank_table_for(&aggregates, benchmark, mode)?;
        for &m in methods {
            if Metric::Method(m) == benchmark {
                continue;
            }
            let ranks = rank_table_for(&aggregates, Metric::Method(m), mode)?;
            rank_shifts.push((mode, m, rank_shift(&bench_ranks, &ranks)?));
        }
    }

    Ok(PipelineOutput { baselines, scores, aggregates, reports, rank_shifts })
}

pub fn load_corpus_file(path: &Path, format: InputFormat) -> Result<Corpus> {
    let file =
        File::open(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
    load_corpus(BufReader::new(file), format)
}

/// Loads inputs, runs every stage and writes the artifacts. Returns the
/// paths written.
pub fn run_pipeline(config: &PipelineConfig) -> Result<Vec<PathBuf>> {
    config.validate()?;
    let baseline_corpus = load_corpus_file(&config.baseline_input, config.format)?;
    let separate;
    let scored_corpus = if config.score_input == config.baseline_input {
        &baseline_corpus
    } else {
        separate = load_corpus_file(&config.score_input, config.format)?;
        &separate
    };
    let out = run_pipeline_on_corpora(
        &baseline_corpus,
        scored_corpus,
        &config.filters,
        &config.methods,
        config.benchmark,
        &config.modes,
    )?;
    out.write_to(&config.output_dir)
}
