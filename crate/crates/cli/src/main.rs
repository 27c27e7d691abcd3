//! Single-binary front end: ingestion, geometry reports, threshold reports,
//! ROC sweeps, synthetic generation, before/after comparison, and SVG
//! rendering, each as one subcommand.
//!
//! Every run is fully determined by its flags: identical invocations produce
//! byte-identical artifacts. Reports echo the resolved configuration in
//! their headers. Exit codes: 0 success, 1 data error (one-line diagnostic
//! naming the file), 2 usage error.

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use scorelab::center::CenterMethod;
use scorelab::dataset::{LabeledDataset, Polarity};
use scorelab::geometry::summarize_domain;
use scorelab::io::{ingest, ingest_partition, InputFormat, LabelMap};
use scorelab::metrics::{roc_sweep, TieRule};
use scorelab::report::{
    comparison_annotations, render_roc_report, render_threshold_report, DomainReport,
    DomainReportRow, DomainSummaryCells, OutputFormat, ReportMeta,
};
use scorelab::svg::{render, ClassStyle, DomainLayer, LineStyle, RenderSpec, ThresholdLayer};
use scorelab::synth::{generate, SynthSpec};
use scorelab::threshold::{build_report, candidate_set, threshold_report, ThresholdCandidate};

#[derive(Parser)]
#[command(
    name = "scorelab",
    version,
    about = "Score-distribution geometry, threshold selection, and SVG diagrams for binary classifiers",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-class domain geometry report (radius / normalize / density).
    #[command(after_help = "Example:\n  scorelab analyze --in scores.csv --center balance")]
    Analyze(AnalyzeArgs),
    /// Threshold strategies evaluated on a train set and optional dev set.
    #[command(
        after_help = "Example:\n  scorelab thresholds --in train.csv --dev dev.csv --format csv --out report.csv"
    )]
    Thresholds(ThresholdsArgs),
    /// ROC sweep: one operating point per distinct score, plus the AUC.
    #[command(after_help = "Example:\n  scorelab roc --in scores.csv --format json")]
    Roc(RocArgs),
    /// Render score domains and thresholds as a deterministic SVG diagram.
    #[command(
        after_help = "Example:\n  scorelab viz --in scores.csv --center balance --thresholds all --out figure.svg"
    )]
    Viz(VizArgs),
    /// Generate a seeded Gaussian score file.
    #[command(
        after_help = "Example:\n  scorelab synth --n 500 --mean 0.5 --std 0.1 --seed 42 --label live --out synth.csv"
    )]
    Synth(SynthArgs),
    /// Before/after comparison of per-class domain geometry.
    #[command(
        after_help = "Example:\n  scorelab compare --before orig.csv --after processed.csv --center balance"
    )]
    Compare(CompareArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum PolarityArg {
    GenuineLow,
    GenuineHigh,
}

impl From<PolarityArg> for Polarity {
    fn from(p: PolarityArg) -> Self {
        match p {
            PolarityArg::GenuineLow => Polarity::GenuineLow,
            PolarityArg::GenuineHigh => Polarity::GenuineHigh,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CenterArg {
    Mean,
    Median,
    Balance,
    WeightedBalance,
}

impl From<CenterArg> for CenterMethod {
    fn from(c: CenterArg) -> Self {
        match c {
            CenterArg::Mean => CenterMethod::Mean,
            CenterArg::Median => CenterMethod::Median,
            CenterArg::Balance => CenterMethod::DistanceBalance,
            CenterArg::WeightedBalance => CenterMethod::WeightedDistanceBalance,
        }
    }
}

// variant names spell out the CLI tokens equal-is-genuine / -attack / -correct
#[allow(clippy::enum_variant_names)]
#[derive(Clone, Copy, ValueEnum)]
enum TieRuleArg {
    EqualIsGenuine,
    EqualIsAttack,
    EqualIsCorrect,
}

impl From<TieRuleArg> for TieRule {
    fn from(t: TieRuleArg) -> Self {
        match t {
            TieRuleArg::EqualIsGenuine => TieRule::EqualIsGenuine,
            TieRuleArg::EqualIsAttack => TieRule::EqualIsAttack,
            TieRuleArg::EqualIsCorrect => TieRule::EqualIsCorrect,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormatArg {
    Auto,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    All,
    Acer,
    Balance,
    Cross,
    Borders,
}

#[derive(Clone, Copy, ValueEnum)]
enum VizThresholdsArg {
    None,
    All,
    Acer,
    Balance,
    Cross,
    Borders,
}

#[derive(Args)]
struct LabelArgs {
    /// Label token of the genuine (bona fide) class.
    #[arg(long, default_value = "live")]
    live_label: String,
    /// Label token of the attack class.
    #[arg(long, default_value = "fake")]
    fake_label: String,
    /// Which semantic class occupies the low-score side.
    #[arg(long, value_enum, default_value = "genuine-low")]
    polarity: PolarityArg,
    /// Input format; `auto` picks by file extension.
    #[arg(long, value_enum, default_value = "auto")]
    input_format: InputFormatArg,
}

impl LabelArgs {
    fn label_map(&self) -> LabelMap {
        LabelMap {
            live: self.live_label.clone(),
            fake: self.fake_label.clone(),
            polarity: self.polarity.into(),
        }
    }

    fn format_for(&self, path: &Path) -> InputFormat {
        match self.input_format {
            InputFormatArg::Auto => InputFormat::from_path(&path.to_string_lossy()),
            InputFormatArg::Csv => InputFormat::Csv,
            InputFormatArg::Json => InputFormat::Json,
        }
    }

    fn echo(&self, meta: &mut ReportMeta) {
        meta.push("live-label", &self.live_label);
        meta.push("fake-label", &self.fake_label);
        meta.push("polarity", Polarity::from(self.polarity));
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Report structure.
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Score file to analyze.
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    labels: LabelArgs,
    /// Center estimator.
    #[arg(long, value_enum, default_value = "balance")]
    center: CenterArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ThresholdsArgs {
    /// Training score file.
    #[arg(long = "in")]
    input: PathBuf,
    /// Optional dev score file evaluated at the same thresholds.
    #[arg(long)]
    dev: Option<PathBuf>,
    #[command(flatten)]
    labels: LabelArgs,
    /// Center estimator backing the cross point.
    #[arg(long, value_enum, default_value = "balance")]
    center: CenterArg,
    /// Which strategies to report.
    #[arg(long, value_enum, default_value = "all")]
    strategy: StrategyArg,
    /// How scores exactly equal to a threshold are classified.
    #[arg(long, value_enum, default_value = "equal-is-genuine")]
    tie_rule: TieRuleArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct RocArgs {
    /// Score file to sweep.
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    labels: LabelArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VizArgs {
    /// Score file to draw. A single-class file renders one domain.
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    labels: LabelArgs,
    /// Center estimator.
    #[arg(long, value_enum, default_value = "balance")]
    center: CenterArg,
    /// Threshold lines to draw; requires both classes unless `none`.
    #[arg(long, value_enum, default_value = "none")]
    thresholds: VizThresholdsArg,
    /// Output SVG path.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 800)]
    width: u32,
    #[arg(long, default_value_t = 360)]
    height: u32,
    /// Score interval mapped to the full width, as `lo,hi`.
    #[arg(long, value_parser = parse_pair, default_value = "0,1")]
    viewport: (f64, f64),
    /// Quantile ring fractions.
    #[arg(long, value_delimiter = ',', default_value = "0.25,0.5,0.75,1.0")]
    rings: Vec<f64>,
    /// Draw per-sample tick marks.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    rug: bool,
    /// Draw the legend block.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    legend: bool,
    /// Figure title.
    #[arg(long)]
    title: Option<String>,
}

#[derive(Args)]
struct SynthArgs {
    /// Number of scores to draw.
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0.5)]
    mean: f64,
    #[arg(long, default_value_t = 0.1)]
    std: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Saturating clamp interval, as `lo,hi`.
    #[arg(long, value_parser = parse_pair)]
    clamp: Option<(f64, f64)>,
    /// Label token written on every row.
    #[arg(long, default_value = "live")]
    label: String,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct CompareArgs {
    /// Baseline score file.
    #[arg(long)]
    before: PathBuf,
    /// Changed score file.
    #[arg(long)]
    after: PathBuf,
    #[command(flatten)]
    labels: LabelArgs,
    /// Center estimator.
    #[arg(long, value_enum, default_value = "balance")]
    center: CenterArg,
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected `lo,hi`, got {s:?}"));
    }
    let lo: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| format!("bad number {:?}", parts[0]))?;
    let hi: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| format!("bad number {:?}", parts[1]))?;
    Ok((lo, hi))
}

fn main() {
    let cli = Cli::parse();
    if let Err(message) = run(cli.command) {
        eprintln!("scorelab: error: {message}");
        std::process::exit(1);
    }
}

fn run(command: Command) -> Result<(), String> {
    match command {
        Command::Analyze(args) => run_analyze(args),
        Command::Thresholds(args) => run_thresholds(args),
        Command::Roc(args) => run_roc(args),
        Command::Viz(args) => run_viz(args),
        Command::Synth(args) => run_synth(args),
        Command::Compare(args) => run_compare(args),
    }
}

fn in_file(path: &Path) -> Result<BufReader<File>, String> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn load_dataset(path: &Path, labels: &LabelArgs) -> Result<LabeledDataset, String> {
    let reader = in_file(path)?;
    ingest(reader, labels.format_for(path), &labels.label_map())
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(out: Option<&PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => {
            std::fs::write(path, content.as_bytes()).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => {
            print!("{content}");
            std::io::stdout()
                .flush()
                .map_err(|e| format!("stdout: {e}"))
        }
    }
}

fn format_name(f: FormatArg) -> &'static str {
    match f {
        FormatArg::Text => "text",
        FormatArg::Csv => "csv",
        FormatArg::Json => "json",
    }
}

fn run_analyze(args: AnalyzeArgs) -> Result<(), String> {
    let ds = load_dataset(&args.input, &args.labels)?;
    let center: CenterMethod = args.center.into();

    let mut meta = ReportMeta::new("analyze");
    meta.push("in", args.input.display());
    args.labels.echo(&mut meta);
    meta.push("center", center);
    meta.push("format", format_name(args.output.format));

    let rows = vec![
        DomainReportRow {
            class: args.labels.live_label.clone(),
            variant: "-".into(),
            summary: DomainSummaryCells::from_summary(&summarize_domain(ds.genuine(), center)),
        },
        DomainReportRow {
            class: args.labels.fake_label.clone(),
            variant: "-".into(),
            summary: DomainSummaryCells::from_summary(&summarize_domain(ds.attack(), center)),
        },
    ];
    let report = DomainReport {
        meta,
        rows,
        annotations: Vec::new(),
    };
    emit(
        args.output.out.as_ref(),
        &report.render(args.output.format.into()),
    )
}

fn run_thresholds(args: ThresholdsArgs) -> Result<(), String> {
    let train = load_dataset(&args.input, &args.labels)?;
    let dev = args
        .dev
        .as_ref()
        .map(|p| load_dataset(p, &args.labels))
        .transpose()?;
    let center: CenterMethod = args.center.into();
    let tie_rule: TieRule = args.tie_rule.into();

    let mut meta = ReportMeta::new("thresholds");
    meta.push("in", args.input.display());
    if let Some(dev_path) = &args.dev {
        meta.push("dev", dev_path.display());
    }
    args.labels.echo(&mut meta);
    meta.push("center", center);
    meta.push(
        "strategy",
        match args.strategy {
            StrategyArg::All => "all",
            StrategyArg::Acer => "acer",
            StrategyArg::Balance => "balance",
            StrategyArg::Cross => "cross",
            StrategyArg::Borders => "borders",
        },
    );
    meta.push("tie-rule", tie_rule);
    meta.push("format", format_name(args.output.format));

    let report = match args.strategy {
        StrategyArg::All => threshold_report(&train, dev.as_ref(), center, tie_rule),
        _ => {
            let set = candidate_set(&train, center);
            let candidates: Vec<ThresholdCandidate> = match args.strategy {
                StrategyArg::Acer => vec![set.acer.left, set.acer.mid, set.acer.right],
                StrategyArg::Balance => vec![set.balance],
                StrategyArg::Cross => vec![set.cross],
                StrategyArg::Borders => vec![set.borders.fake, set.borders.live],
                StrategyArg::All => unreachable!(),
            };
            build_report(&candidates, &train, dev.as_ref(), tie_rule)
        }
    }
    .map_err(|e| e.to_string())?;

    emit(
        args.output.out.as_ref(),
        &render_threshold_report(&meta, &report, args.output.format.into()),
    )
}

fn run_roc(args: RocArgs) -> Result<(), String> {
    let ds = load_dataset(&args.input, &args.labels)?;
    let roc = roc_sweep(&ds);

    let mut meta = ReportMeta::new("roc");
    meta.push("in", args.input.display());
    args.labels.echo(&mut meta);
    meta.push("format", format_name(args.output.format));

    emit(
        args.output.out.as_ref(),
        &render_roc_report(&meta, &roc, args.output.format.into()),
    )
}

fn run_viz(args: VizArgs) -> Result<(), String> {
    let reader = in_file(&args.input)?;
    let labels = args.labels.label_map();
    let partition = ingest_partition(reader, args.labels.format_for(&args.input), &labels)
        .map_err(|e| format!("{}: {e}", args.input.display()))?;
    let center: CenterMethod = args.center.into();

    let mut domains = Vec::new();
    if let Some(genuine) = &partition.genuine {
        domains.push(DomainLayer {
            summary: summarize_domain(genuine, center),
            samples: Some(genuine.as_slice().to_vec()),
            style: ClassStyle::palette(0, &args.labels.live_label),
        });
    }
    if let Some(attack) = &partition.attack {
        domains.push(DomainLayer {
            summary: summarize_domain(attack, center),
            samples: Some(attack.as_slice().to_vec()),
            style: ClassStyle::palette(1, &args.labels.fake_label),
        });
    }

    let threshold_layers: Vec<ThresholdLayer> = match args.thresholds {
        VizThresholdsArg::None => Vec::new(),
        selection => {
            let ds = partition.clone().into_dataset().map_err(|_| {
                format!(
                    "{}: threshold lines require both classes",
                    args.input.display()
                )
            })?;
            let set = candidate_set(&ds, center);
            let picked: Vec<ThresholdCandidate> = match selection {
                VizThresholdsArg::All => vec![
                    set.borders.fake,
                    set.borders.live,
                    set.cross,
                    set.balance,
                    set.acer.left,
                    set.acer.right,
                ],
                VizThresholdsArg::Acer => vec![set.acer.left, set.acer.mid, set.acer.right],
                VizThresholdsArg::Balance => vec![set.balance],
                VizThresholdsArg::Cross => vec![set.cross],
                VizThresholdsArg::Borders => vec![set.borders.fake, set.borders.live],
                VizThresholdsArg::None => unreachable!(),
            };
            picked
                .into_iter()
                .map(|candidate| ThresholdLayer {
                    style: LineStyle::for_candidate(&candidate),
                    candidate,
                })
                .collect()
        }
    };

    let config_note = format!(
        "scorelab {} | viz in={} polarity={} center={} thresholds={} width={} height={} viewport={},{} rings={} rug={} legend={}",
        env!("CARGO_PKG_VERSION"),
        args.input.display(),
        labels.polarity,
        center,
        match args.thresholds {
            VizThresholdsArg::None => "none",
            VizThresholdsArg::All => "all",
            VizThresholdsArg::Acer => "acer",
            VizThresholdsArg::Balance => "balance",
            VizThresholdsArg::Cross => "cross",
            VizThresholdsArg::Borders => "borders",
        },
        args.width,
        args.height,
        args.viewport.0,
        args.viewport.1,
        args.rings
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(","),
        args.rug,
        args.legend,
    );

    let spec = RenderSpec {
        width: args.width,
        height: args.height,
        viewport: args.viewport,
        domains,
        thresholds: threshold_layers,
        rug: args.rug,
        rings: args.rings.clone(),
        legend: args.legend,
        title: args.title.clone(),
        config_note: Some(config_note),
    };
    let svg = render(&spec).map_err(|e| e.to_string())?;
    std::fs::write(&args.out, svg.as_bytes()).map_err(|e| format!("{}: {e}", args.out.display()))
}

fn run_synth(args: SynthArgs) -> Result<(), String> {
    let spec = SynthSpec {
        n: args.n,
        mean: args.mean,
        std_dev: args.std,
        seed: args.seed,
        clamp: args.clamp,
    };
    let scores = generate(&spec).map_err(|e| e.to_string())?;
    let mut body = String::from("id,score,label\n");
    for (i, s) in scores.iter().enumerate() {
        body.push_str(&format!("s{:06},{s},{}\n", i + 1, args.label));
    }
    std::fs::write(&args.out, body.as_bytes()).map_err(|e| format!("{}: {e}", args.out.display()))
}

fn run_compare(args: CompareArgs) -> Result<(), String> {
    let before = load_dataset(&args.before, &args.labels)?;
    let after = load_dataset(&args.after, &args.labels)?;
    let center: CenterMethod = args.center.into();

    let mut meta = ReportMeta::new("compare");
    meta.push("before", args.before.display());
    meta.push("after", args.after.display());
    args.labels.echo(&mut meta);
    meta.push("center", center);
    meta.push("format", format_name(args.output.format));

    let mut rows = Vec::new();
    let mut annotations = Vec::new();
    for (class, b, a) in [
        (&args.labels.live_label, before.genuine(), after.genuine()),
        (&args.labels.fake_label, before.attack(), after.attack()),
    ] {
        let sb = summarize_domain(b, center);
        let sa = summarize_domain(a, center);
        let cmp = scorelab::geometry::compare_domains(&sb, &sa);
        rows.push(DomainReportRow {
            class: class.clone(),
            variant: "before".into(),
            summary: DomainSummaryCells::from_summary(&sb),
        });
        rows.push(DomainReportRow {
            class: class.clone(),
            variant: "after".into(),
            summary: DomainSummaryCells::from_summary(&sa),
        });
        let delta_cells = DomainSummaryCells {
            radius: cmp.radius_delta,
            normalize: cmp.normalize_delta,
            density: cmp.density_delta,
            n: sa.n,
            center: sa.center.value - sb.center.value,
            center_method: center.to_string(),
            min: sa.min - sb.min,
            max: sa.max - sb.max,
        };
        rows.push(DomainReportRow {
            class: class.clone(),
            variant: "delta".into(),
            summary: delta_cells,
        });
        annotations.extend(comparison_annotations(class, &cmp));
    }

    let report = DomainReport {
        meta,
        rows,
        annotations,
    };
    emit(
        args.output.out.as_ref(),
        &report.render(args.output.format.into()),
    )
}
