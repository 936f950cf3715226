use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fieldnorm::aggregate::{aggregate_all, aggregated_methods, parse_modes, read_aggregates_csv, write_aggregates_csv};
use fieldnorm::analyze::{correlation_report, rank_shift, rank_table_for, write_rank_shift_csv};
use fieldnorm::normalize::{parse_method_list, read_scores_csv, write_scores_csv};
use fieldnorm::pipeline::{load_corpus_file, validate_analysis};
use fieldnorm::plot::write_plot_csv;
use fieldnorm::replay::Status;
use fieldnorm::{
    apply_filters, compute_baseline_set, emit_plot_data, generate_corpus, replay_paper_tables, run_pipeline,
    score_corpus, Error, FilterSpec, InputFormat, Metric, Mode, PipelineConfig, PlotAxis, SynthConfig,
};

const EXIT_VALIDATION: u8 = 2;
const EXIT_DATA: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

/// Field-normalized citation indicators for institutions.
#[derive(Parser)]
#[command(name = "fieldnorm", version)]
struct Cli {
    /// Print a machine-readable JSON summary on stdout.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate and filter a corpus, writing corpus.csv and provenance.txt.
    Ingest {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        filters: FilterArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Per-field baseline statistics (baselines.csv, baseline_citations.csv).
    Baselines {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        filters: FilterArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Per-paper normalized scores (scores.csv).
    Score {
        #[command(flatten)]
        input: InputArgs,
        /// Corpus the field baselines are computed from; defaults to --input.
        #[arg(long)]
        baseline_input: Option<PathBuf>,
        #[command(flatten)]
        filters: FilterArgs,
        #[arg(long, default_value = "all")]
        methods: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Institution sums and averages from a scores.csv (aggregates.csv).
    Aggregate {
        /// A scores.csv written by `score`.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Correlations and rank shifts from an aggregates.csv.
    Analyze {
        /// An aggregates.csv written by `aggregate`.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "raw")]
        benchmark: String,
        /// Methods to compare; defaults to every method in the input.
        #[arg(long)]
        methods: Option<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a synthetic corpus.
    Simulate {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// JSON generator configuration; overrides the preset options.
        #[arg(long)]
        synth_config: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Preset::CrossField)]
        preset: Preset,
        #[arg(long, default_value_t = 22)]
        fields: usize,
        #[arg(long, default_value_t = 500)]
        institutions: usize,
        #[arg(long, default_value_t = 20)]
        papers_min: usize,
        #[arg(long, default_value_t = 400)]
        papers_max: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Consistency checks on the embedded Physics ranking tables.
    Replay,
    /// x,y series per institution for scatter plots.
    Plotdata {
        /// An aggregates.csv written by `aggregate` or `pipeline`.
        #[arg(long)]
        input: PathBuf,
        /// Metric name, or rank(metric).
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long, value_enum, default_value_t = SingleMode::Sum)]
        mode: SingleMode,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every stage and write all artifacts.
    Pipeline {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        baseline_input: Option<PathBuf>,
        #[command(flatten)]
        filters: FilterArgs,
        #[arg(long, default_value = "all")]
        methods: String,
        #[arg(long, default_value = "raw")]
        benchmark: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Args, Default)]
struct FilterArgs {
    /// Comma-separated document types.
    #[arg(long)]
    filter_doc_types: Option<String>,
    /// A year (2014) or an inclusive range (2010:2014).
    #[arg(long)]
    filter_years: Option<String>,
    #[arg(long)]
    filter_fields: Option<String>,
    /// Comma-separated institution ids to score (baselines keep every institution).
    #[arg(long)]
    filter_institutions: Option<String>,
    /// Keep the N institutions with the most papers.
    #[arg(long)]
    top_n: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Jsonl,
}

impl From<FormatArg> for InputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => InputFormat::Csv,
            FormatArg::Jsonl => InputFormat::Jsonl,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Sum,
    Average,
    Both,
}

impl ModeArg {
    fn modes(self) -> Vec<Mode> {
        let name = match self {
            ModeArg::Sum => "sum",
            ModeArg::Average => "average",
            ModeArg::Both => "both",
        };
        parse_modes(name).expect("valid mode name")
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SingleMode {
    Sum,
    Average,
}

impl From<SingleMode> for Mode {
    fn from(m: SingleMode) -> Self {
        match m {
            SingleMode::Sum => Mode::Sum,
            SingleMode::Average => Mode::Average,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    SingleField,
    CrossField,
    LeadingAndRest,
}

fn split_list(s: &str) -> Vec<String> {
    s.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect()
}

fn parse_years(s: &str) -> fieldnorm::Result<(i32, i32)> {
    let bad = || Error::InvalidConfig(format!("invalid year range `{s}`"));
    let (lo, hi) = match s.split_once([':', '-']) {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), s.trim()),
    };
    Ok((lo.parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?))
}

impl FilterArgs {
    fn spec(&self) -> fieldnorm::Result<FilterSpec> {
        let spec = FilterSpec {
            doc_types: self.filter_doc_types.as_deref().map(split_list),
            year_range: self.filter_years.as_deref().map(parse_years).transpose()?,
            fields: self.filter_fields.as_deref().map(split_list),
            institutions: self.filter_institutions.as_deref().map(split_list),
            top_n_by_output: self.top_n,
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn create(path: &Path) -> fieldnorm::Result<BufWriter<File>> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    Ok(BufWriter::new(File::create(path)?))
}

fn open(path: &Path) -> fieldnorm::Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

/// Writes to `path`, or to stdout when `path` is `None`.
fn with_output(path: Option<&Path>, f: impl FnOnce(&mut dyn Write) -> fieldnorm::Result<()>) -> fieldnorm::Result<()> {
    match path {
        Some(p) => {
            let mut w = create(p)?;
            f(&mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            f(&mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn paths_json(paths: &[PathBuf]) -> serde_json::Value {
    paths.iter().map(|p| p.display().to_string()).collect()
}

struct Outcome {
    summary: String,
    json: serde_json::Value,
    exit: u8,
}

impl Outcome {
    fn ok(summary: String, json: serde_json::Value) -> Self {
        Outcome { summary, json, exit: 0 }
    }
}

fn run(cli: &Cli) -> fieldnorm::Result<Outcome> {
    match &cli.command {
        Command::Ingest { input, filters, out } => {
            let corpus = load_corpus_file(&input.input, input.format.into())?;
            let total = corpus.len();
            let spec = filters.spec()?;
            let kept = apply_filters(&corpus, &spec)?;
            fs::create_dir_all(out)?;
            let paths = [out.join("corpus.csv"), out.join("provenance.txt")];
            let mut w = create(&paths[0])?;
            kept.write_csv(&mut w)?;
            w.flush()?;
            let mut w = create(&paths[1])?;
            kept.write_provenance(&mut w)?;
            w.flush()?;
            Ok(Outcome::ok(
                format!("kept {} of {total} records", kept.len()),
                serde_json::json!({"records_in": total, "records_out": kept.len(), "files": paths_json(&paths)}),
            ))
        }
        Command::Baselines { input, filters, out } => {
            let corpus = load_corpus_file(&input.input, input.format.into())?;
            let population = apply_filters(&corpus, &filters.spec()?.population_part())?;
            let baselines = compute_baseline_set(&population)?;
            fs::create_dir_all(out)?;
            let paths = [out.join("baselines.csv"), out.join("baseline_citations.csv")];
            let mut w = create(&paths[0])?;
            baselines.write_csv(&mut w)?;
            w.flush()?;
            let mut w = create(&paths[1])?;
            baselines.write_sorted_csv(&mut w)?;
            w.flush()?;
            let flagged = baselines.per_field.values().filter(|b| !b.flags.is_empty()).count();
            Ok(Outcome::ok(
                format!("{} fields ({flagged} with degenerate flags)", baselines.len()),
                serde_json::json!({"fields": baselines.len(), "flagged": flagged, "files": paths_json(&paths)}),
            ))
        }
        Command::Score { input, baseline_input, filters, methods, out } => {
            let methods = parse_method_list(methods)?;
            let spec = filters.spec()?;
            let format = input.format.into();
            let scored = load_corpus_file(&input.input, format)?;
            let base_corpus = match baseline_input {
                Some(p) if *p != input.input => Some(load_corpus_file(p, format)?),
                _ => None,
            };
            let population = apply_filters(base_corpus.as_ref().unwrap_or(&scored), &spec.population_part())?;
            let baselines = compute_baseline_set(&population)?;
            drop(population);
            let rows = score_corpus(&apply_filters(&scored, &spec)?, &baselines, &methods)?;
            fs::create_dir_all(out)?;
            let paths = [out.join("baselines.csv"), out.join("scores.csv")];
            let mut w = create(&paths[0])?;
            baselines.write_csv(&mut w)?;
            w.flush()?;
            let mut w = create(&paths[1])?;
            write_scores_csv(&rows, &mut w)?;
            w.flush()?;
            Ok(Outcome::ok(
                format!("scored {} papers with {} methods", rows.len(), methods.len()),
                serde_json::json!({"papers": rows.len(), "files": paths_json(&paths)}),
            ))
        }
        Command::Aggregate { input, out } => {
            let rows = read_scores_csv(open(input)?)?;
            let aggs = aggregate_all(&rows)?;
            fs::create_dir_all(out)?;
            let path = out.join("aggregates.csv");
            let mut w = create(&path)?;
            write_aggregates_csv(&aggs, &mut w)?;
            w.flush()?;
            Ok(Outcome::ok(
                format!("aggregated {} institutions", aggs.len()),
                serde_json::json!({"institutions": aggs.len(), "files": [path.display().to_string()]}),
            ))
        }
        Command::Analyze { input, benchmark, methods, mode, out } => {
            let aggs = read_aggregates_csv(open(input)?)?;
            let benchmark: Metric = benchmark.parse()?;
            let methods = match methods {
                Some(m) => parse_method_list(m)?,
                None => aggregated_methods(&aggs),
            };
            let modes = mode.modes();
            validate_analysis(&FilterSpec::all(), &methods, benchmark, &modes)?;
            let mut metrics = vec![Metric::Raw];
            metrics.extend(methods.iter().map(|&m| Metric::Method(m)));
            metrics.retain(|&m| m != benchmark);
            fs::create_dir_all(out)?;
            let mut paths = Vec::new();
            let mut reports = Vec::new();
            for &mode in &modes {
                let report = correlation_report(&aggs, benchmark, &metrics, mode)?;
                let json = report.to_json()?;
                let path = out.join(format!("correlation_{}.json", mode.as_str().to_ascii_lowercase()));
                let mut w = create(&path)?;
                writeln!(w, "{json}")?;
                w.flush()?;
                paths.push(path);
                reports.push(serde_json::from_str::<serde_json::Value>(&json)?);
                let bench = rank_table_for(&aggs, benchmark, mode)?;
                for &m in &methods {
                    if Metric::Method(m) == benchmark {
                        continue;
                    }
                    let rows = rank_shift(&bench, &rank_table_for(&aggs, m.into(), mode)?)?;
                    let path = out.join(format!(
                        "rankshift_{}_{}.csv",
                        mode.as_str().to_ascii_lowercase(),
                        m.as_str().to_ascii_lowercase()
                    ));
                    let mut w = create(&path)?;
                    write_rank_shift_csv(&rows, &mut w)?;
                    w.flush()?;
                    paths.push(path);
                }
            }
            Ok(Outcome::ok(
                format!("analyzed {} institutions, wrote {} files", aggs.len(), paths.len()),
                serde_json::json!({"reports": reports, "files": paths_json(&paths)}),
            ))
        }
        Command::Simulate { seed, synth_config, preset, fields, institutions, papers_min, papers_max, format, out } => {
            let config = match synth_config {
                Some(p) => {
                    let mut c: SynthConfig = serde_json::from_reader(open(p)?)?;
                    c.seed = *seed;
                    c
                }
                None => {
                    let papers = (*papers_min, *papers_max);
                    match preset {
                        Preset::SingleField => SynthConfig::single_field(*seed, *institutions, papers, 2.0, 1.0, 0.4),
                        Preset::CrossField => SynthConfig::cross_field(*seed, *fields, *institutions, papers),
                        Preset::LeadingAndRest => {
                            let leading = institutions / 2;
                            SynthConfig::leading_and_rest(*seed, *fields, leading, institutions - leading, papers)
                        }
                    }
                }
            };
            let corpus = generate_corpus(&config)?;
            with_output(out.as_deref(), |w| corpus.write((*format).into(), w))?;
            Ok(Outcome::ok(
                format!("generated {} records for {} institutions", corpus.len(), config.n_institutions),
                serde_json::json!({"records": corpus.len(), "institutions": config.n_institutions, "seed": seed}),
            ))
        }
        Command::Replay => {
            let report = replay_paper_tables();
            let fails = report.count(Status::Fail);
            let json: serde_json::Value = serde_json::from_str(&report.to_json()?)?;
            Ok(Outcome { summary: report.to_string(), json, exit: if fails == 0 { 0 } else { EXIT_DATA } })
        }
        Command::Plotdata { input, x, y, mode, out } => {
            let aggs = read_aggregates_csv(open(input)?)?;
            let (x, y): (PlotAxis, PlotAxis) = (x.parse()?, y.parse()?);
            let points = emit_plot_data(&aggs, x, y, (*mode).into())?;
            with_output(out.as_deref(), |w| write_plot_csv(&points, w))?;
            Ok(Outcome::ok(
                format!("{} points ({x} vs {y})", points.len()),
                serde_json::json!({"points": points.len(), "x": x.to_string(), "y": y.to_string()}),
            ))
        }
        Command::Pipeline { input, baseline_input, filters, methods, benchmark, mode, out } => {
            let config = PipelineConfig {
                baseline_input: baseline_input.clone().unwrap_or_else(|| input.input.clone()),
                score_input: input.input.clone(),
                format: input.format.into(),
                filters: filters.spec()?,
                methods: parse_method_list(methods)?,
                benchmark: benchmark.parse()?,
                modes: mode.modes(),
                output_dir: out.clone(),
            };
            let paths = run_pipeline(&config)?;
            Ok(Outcome::ok(
                format!("wrote {} artifacts to {}", paths.len(), out.display()),
                serde_json::json!({"files": paths_json(&paths)}),
            ))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    if e.is_validation_error() {
        EXIT_VALIDATION
    } else if e.is_data_error() {
        EXIT_DATA
    } else if let Error::Io(io) = e {
        match io.kind() {
            io::ErrorKind::NotFound | io::ErrorKind::PermissionDenied => EXIT_VALIDATION,
            io::ErrorKind::InvalidData | io::ErrorKind::UnexpectedEof => EXIT_DATA,
            _ => EXIT_INTERNAL,
        }
    } else {
        EXIT_INTERNAL
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            // data written to stdout keeps stdout to itself
            let stdout_taken =
                matches!(cli.command, Command::Simulate { out: None, .. } | Command::Plotdata { out: None, .. });
            let text = if cli.json {
                serde_json::to_string_pretty(&outcome.json).unwrap_or_default()
            } else {
                outcome.summary
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = if stdout_taken { writeln!(io::stderr(), "{text}") } else { writeln!(io::stdout(), "{text}") };
            ExitCode::from(outcome.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
