//! `distinct`: distinctiveness centrality from the command line.
//!
//! Exit status is 0 on success, 1 when the input data is rejected and 2 on
//! usage errors.

mod select;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use distinctiveness::io::{
    format_significant, parse_edge_list, parse_gexf_minimal, render_sweep_svg, write_edge_list,
    write_sweep_csv, ResultTable,
};
use distinctiveness::metrics::negative_contribution_threshold;
use distinctiveness::stats::rank_scores;
use distinctiveness::{
    barabasi_albert, bounds, builtin_dataset, compute_baseline, correlation_sweep, normalize,
    spearman, CentralityVector, Dataset, Direction, Distinctiveness, GeneratorParams, Graph,
    MetricId, TieRule,
};
use select::{expand, parse_token, Selected, Token};

#[derive(Parser, Debug)]
#[command(name = "distinct", version, about = "Distinctiveness centrality and baseline metrics for weighted graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute metric scores for every node.
    Compute(ComputeArgs),
    /// Print the analytic lower and upper bound of a metric.
    Bounds(BoundsArgs),
    /// Rank nodes by one or more metrics.
    Rank(RankArgs),
    /// Spearman correlation matrix between metrics.
    Compare(CompareArgs),
    /// Generate a Barabási–Albert graph with integer weights.
    Generate(GenerateArgs),
    /// Mean Spearman correlation against alpha over a random-graph ensemble.
    Sweep(SweepArgs),
    /// List or export the embedded datasets.
    Datasets {
        #[command(subcommand)]
        action: DatasetAction,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Edge list (tab separated) or `.gexf` file.
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Embedded dataset name (see `distinct datasets list`).
    #[arg(long, short)]
    dataset: Option<Dataset>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum DirectionArg {
    Undirected,
    In,
    Out,
    /// Both `in` and `out` on directed graphs.
    Both,
}

#[derive(Args, Debug)]
struct MetricArgs {
    /// Comma-separated metrics: d1..d5, `dc` for all five, baseline names
    /// (dg, wdg, clo, wclo, btw, wbtw, eig, weig, con, wcon, es, wes) or
    /// `baselines` for all twelve.
    #[arg(long, short, value_delimiter = ',', value_parser = parse_token, default_value = "dc")]
    metrics: Vec<Token>,
    /// Comma-separated alpha values (>= 1).
    #[arg(long, short, value_delimiter = ',', default_value = "1")]
    alpha: Vec<f64>,
    /// Direction for distinctiveness metrics; defaults to `undirected` on
    /// undirected graphs and `both` on directed ones.
    #[arg(long, value_enum)]
    direction: Option<DirectionArg>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    metric: MetricArgs,
    /// Rescale distinctiveness scores into [0, 1] by their analytic bounds.
    #[arg(long)]
    normalize: bool,
    #[arg(long, short, value_enum, default_value = "csv")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long)]
    metric: MetricId,
    /// Number of nodes.
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1.0)]
    min_weight: f64,
    #[arg(long, default_value_t = 1.0)]
    max_weight: f64,
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TieRuleArg {
    Competition,
    Average,
}

#[derive(Args, Debug)]
struct RankArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    metric: MetricArgs,
    #[arg(long, value_enum, default_value = "competition")]
    tie_rule: TieRuleArg,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CompareArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    metric: MetricArgs,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GeneratorArgs {
    /// Number of nodes.
    #[arg(long, default_value_t = 50)]
    n: usize,
    /// Edges attached by every new node.
    #[arg(long, short = 'm', default_value_t = 2)]
    m_attach: usize,
    #[arg(long, default_value_t = 1)]
    weight_low: u32,
    #[arg(long, default_value_t = 20)]
    weight_high: u32,
    /// Random seed.
    #[arg(long, env = "DISTINCT_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[command(flatten)]
    generator: GeneratorArgs,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    generator: GeneratorArgs,
    /// Number of random graphs.
    #[arg(long, default_value_t = 200)]
    ensemble: usize,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5")]
    alphas: Vec<f64>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// CSV destination (default stdout).
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Also write a line chart of mean rho against alpha.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum DatasetAction {
    /// Names and sizes of the embedded datasets.
    List,
    /// Print a dataset as an edge list.
    Export {
        name: Dataset,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write `{}`", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn load(source: &Source) -> Result<Graph> {
    if let Some(d) = source.dataset {
        return Ok(builtin_dataset(d));
    }
    let path = source.input.as_ref().expect("clap enforces one source");
    let text = fs::read_to_string(path).with_context(|| format!("cannot read `{}`", path.display()))?;
    let is_gexf = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("gexf"));
    if is_gexf {
        let parsed = parse_gexf_minimal(&text).with_context(|| format!("in `{}`", path.display()))?;
        for w in &parsed.warnings {
            eprintln!("warning: {}: {w}", path.display());
        }
        Ok(parsed.graph)
    } else {
        let (graph, report) = parse_edge_list(&text).with_context(|| format!("in `{}`", path.display()))?;
        if report.merged_edges > 0 {
            eprintln!("warning: {}: {} parallel edges merged by summing weights", path.display(), report.merged_edges);
        }
        if report.self_loops_dropped > 0 {
            eprintln!("warning: {}: {} self-loops dropped", path.display(), report.self_loops_dropped);
        }
        Ok(graph)
    }
}

fn directions(graph: &Graph, arg: Option<DirectionArg>) -> Result<Vec<Direction>> {
    let dirs = match (graph.is_directed(), arg) {
        (false, None | Some(DirectionArg::Undirected)) => vec![Direction::Undirected],
        (true, None | Some(DirectionArg::Both)) => vec![Direction::In, Direction::Out],
        (true, Some(DirectionArg::In)) => vec![Direction::In],
        (true, Some(DirectionArg::Out)) => vec![Direction::Out],
        (directed, Some(d)) => bail!(
            "direction `{}` does not apply to {} graph",
            d.to_possible_value().unwrap().get_name(),
            if directed { "a directed" } else { "an undirected" }
        ),
    };
    Ok(dirs)
}

/// Score columns in deterministic order: distinctiveness metrics by alpha,
/// then direction, then requested order; baselines afterwards.
fn columns(graph: &Graph, args: &MetricArgs, normalized: bool) -> Result<Vec<CentralityVector>> {
    let selected = expand(&args.metrics);
    let dirs = directions(graph, args.direction)?;
    let mut out = Vec::new();
    if selected.iter().any(|s| matches!(s, Selected::Dc(_))) {
        for &alpha in &args.alpha {
            for &dir in &dirs {
                let dc = Distinctiveness::new(graph, alpha, dir)?;
                for s in &selected {
                    if let Selected::Dc(id) = *s {
                        let v = dc.metric(id);
                        if normalized {
                            let b = bounds(id, graph.node_count(), graph.min_weight(), graph.max_weight(), alpha)?;
                            out.push(normalize(&v, &b)?);
                        } else {
                            out.push(v);
                        }
                    }
                }
            }
        }
    }
    for s in &selected {
        if let Selected::Baseline(spec) = *s {
            out.push(compute_baseline(graph, spec)?);
        }
    }
    Ok(out)
}

fn compute(args: &ComputeArgs) -> Result<()> {
    let graph = load(&args.source)?;
    let mut table = ResultTable::new(graph.labels().clone());
    for c in columns(&graph, &args.metric, args.normalize)? {
        table.push(c)?;
    }
    for i in graph.isolates() {
        eprintln!("warning: node `{}` is isolated; its scores are 0", graph.label(i));
    }
    let text = match args.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    };
    emit(args.output.as_deref(), &text)
}

fn bounds_cmd(args: &BoundsArgs) -> Result<()> {
    let b = bounds(args.metric, args.n, args.min_weight, args.max_weight, args.alpha)?;
    let mut text = format!(
        "lower={} upper={}\n",
        format_significant(b.lower, 6),
        format_significant(b.upper, 6)
    );
    if matches!(args.metric, MetricId::D1 | MetricId::D2 | MetricId::D3) && args.alpha > 1.0 {
        text.push_str(&format!(
            "# neighbours with degree above {} contribute negatively\n",
            format_significant(negative_contribution_threshold(args.n, args.alpha), 6)
        ));
    }
    emit(None, &text)
}

fn rank_cmd(args: &RankArgs) -> Result<()> {
    let graph = load(&args.source)?;
    let rule = match args.tie_rule {
        TieRuleArg::Competition => TieRule::Competition,
        TieRuleArg::Average => TieRule::Average,
    };
    let cols = columns(&graph, &args.metric, false)?;
    let mut text = String::from("node");
    for c in &cols {
        text.push(',');
        text.push_str(&c.column_name());
    }
    text.push('\n');
    let ranks: Vec<Vec<f64>> = cols.iter().map(|c| rank_scores(c.scores(), rule)).collect();
    for (i, label) in graph.labels().iter().enumerate() {
        text.push_str(label);
        for r in &ranks {
            text.push(',');
            text.push_str(&format_significant(r[i], 6));
        }
        text.push('\n');
    }
    emit(args.output.as_deref(), &text)
}

fn compare(args: &CompareArgs) -> Result<()> {
    let graph = load(&args.source)?;
    let cols = columns(&graph, &args.metric, false)?;
    if cols.len() < 2 {
        bail!("compare needs at least two metric columns, got {}", cols.len());
    }
    let mut text = String::from("metric");
    for c in &cols {
        text.push(',');
        text.push_str(&c.column_name());
    }
    text.push('\n');
    for a in &cols {
        text.push_str(&a.column_name());
        for b in &cols {
            let rho = spearman(a, b).with_context(|| format!("{} vs {}", a.column_name(), b.column_name()))?;
            text.push(',');
            text.push_str(&format_significant(rho, 6));
        }
        text.push('\n');
    }
    emit(args.output.as_deref(), &text)
}

fn params(g: &GeneratorArgs) -> GeneratorParams {
    GeneratorParams::new(g.n, g.m_attach, g.weight_low, g.weight_high, g.seed)
}

fn generate(args: &GenerateArgs) -> Result<()> {
    let p = params(&args.generator);
    let graph = barabasi_albert(&p)?;
    let body = write_edge_list(&graph);
    let (directive, edges) = body.split_once('\n').unwrap_or((&body, ""));
    let text = format!(
        "{directive}\n# generator=barabasi-albert n={} m_attach={} weight_low={} weight_high={} seed={}\n{edges}",
        p.n, p.m_attach, p.weight_low, p.weight_high, p.seed
    );
    emit(args.output.as_deref(), &text)
}

fn sweep(args: &SweepArgs) -> Result<()> {
    if let Some(t) = args.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("cannot configure worker threads")?;
    }
    let p = params(&args.generator);
    let result = correlation_sweep(&p, args.ensemble, &args.alphas, p.seed)?;
    let perfect = result
        .events
        .iter()
        .filter(|e| matches!(e.kind, distinctiveness::stats::SweepEventKind::Perfect(_)))
        .count();
    if !result.events.is_empty() {
        eprintln!(
            "note: {} per-graph events ({perfect} with |rho| = 1, {} undefined)",
            result.events.len(),
            result.events.len() - perfect
        );
    }
    emit(args.output.as_deref(), &write_sweep_csv(&result))?;
    if let Some(svg) = &args.svg {
        fs::write(svg, render_sweep_svg(&result, &[]))
            .with_context(|| format!("cannot write `{}`", svg.display()))?;
    }
    Ok(())
}

fn datasets(action: &DatasetAction) -> Result<()> {
    match action {
        DatasetAction::List => {
            let mut text = String::new();
            for d in Dataset::ALL {
                text.push_str(&format!("{}\t{}\n", d.name(), d.description()));
            }
            emit(None, &text)
        }
        DatasetAction::Export { name, output } => emit(output.as_deref(), name.edge_list()),
    }
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Bounds(a) => bounds_cmd(a),
        Command::Rank(a) => rank_cmd(a),
        Command::Compare(a) => compare(a),
        Command::Generate(a) => generate(a),
        Command::Sweep(a) => sweep(a),
        Command::Datasets { action } => datasets(action),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
