mod report;

use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use signed_cc::cycles::{find_adjacent_triple, pack_cycles};
use signed_cc::format::{parse_graph, write_graph};
use signed_cc::generate::{
    generate_clusterable_instance, generate_random, generate_subclass_instance,
    DEFAULT_ATTEMPT_BUDGET,
};
use signed_cc::oracle::{approximation_report_for, DEFAULT_ORACLE_LIMIT};
use signed_cc::patterns::{forbidden_subgraph_scan, ForbiddenPattern};
use signed_cc::{
    brute_force_optimum, count_disagreements, enumerate_weakly_negative_cycles, is_clusterable,
    run_cc_with, triangle_condition_check, CcOptions, CcOutcome, CycleBound, SignedGraph,
};

use report::{trace_entries, Analysis, AnalysisParts, Disagreements, OracleBlock, ResultFile};

const EXIT_IO: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INVARIANT: u8 = 3;
const EXIT_TRUNCATED: u8 = 4;
const EXIT_RATIO: u8 = 5;
const EXIT_TOO_LARGE: u8 = 6;
const EXIT_EXHAUSTED: u8 = 7;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "sgcc",
    version,
    about = "Correlation clustering on signed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the clustering pipeline and write a result file.
    Cluster(ClusterArgs),
    /// Structural analysis only: cycles, packing, subclass checks.
    Analyze(AnalyzeArgs),
    /// Compare the pipeline against the exhaustive optimum.
    Compare(CompareArgs),
    /// Write a generated graph file.
    Gen(GenArgs),
    /// Time the pipeline on sparse random graphs.
    Bench(BenchArgs),
}

#[derive(Args)]
struct Output {
    /// Destination file; standard output when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CycleArgs {
    /// Longest cycle enumerated; defaults to the vertex count.
    #[arg(long)]
    max_cycle_length: Option<usize>,
    /// Accept a bound below the vertex count.
    #[arg(long)]
    allow_truncated: bool,
}

#[derive(Args)]
struct ClusterArgs {
    input: PathBuf,
    /// Include the step-by-step trace.
    #[arg(long)]
    trace: bool,
    /// Join clusters with no edges between them after merging.
    #[arg(long)]
    post_merge: bool,
    /// Attach the analysis block (exponential in the worst case).
    #[arg(long)]
    with_analysis: bool,
    #[command(flatten)]
    cycles: CycleArgs,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct AnalyzeArgs {
    input: PathBuf,
    #[command(flatten)]
    cycles: CycleArgs,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct CompareArgs {
    input: PathBuf,
    /// Largest vertex count handed to the exhaustive search.
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
    #[arg(long)]
    trace: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Subclass,
    Clusterable,
    Random,
}

#[derive(Args)]
struct GenArgs {
    kind: Kind,
    /// Vertex count (subclass, random).
    #[arg(short)]
    n: Option<usize>,
    /// Planted cluster sizes (clusterable), e.g. 3,3.
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    /// Edge probability; defaults to an expected degree of 3 (0.7 for clusterable).
    #[arg(long)]
    p_edge: Option<f64>,
    /// Fraction of negative edges.
    #[arg(long, default_value_t = 0.3)]
    p_neg: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Rejection-sampling attempts (subclass).
    #[arg(long, default_value_t = DEFAULT_ATTEMPT_BUDGET)]
    budget: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct BenchArgs {
    /// Vertex counts to time.
    sizes: Vec<usize>,
    /// Expected average degree.
    #[arg(long, default_value_t = 3.0)]
    density: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Runs per size; the median is reported.
    #[arg(long, default_value_t = 3)]
    repeats: usize,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<signed_cc::Error> for Failure {
    fn from(e: signed_cc::Error) -> Self {
        use signed_cc::Error::*;
        let code = match e {
            Parse { .. } | SelfLoop { .. } | DuplicateEdge { .. } | VertexOutOfRange { .. } => {
                EXIT_PARSE
            }
            EnumerationTruncated { .. } => EXIT_TRUNCATED,
            TooLarge { .. } => EXIT_TOO_LARGE,
            GenerationExhausted { .. } => EXIT_EXHAUSTED,
            InvalidParameter(_) => EXIT_USAGE,
            OverlappingSets { .. } | PartitionMismatch { .. } => EXIT_INVARIANT,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Cluster(a) => cluster(a),
        Command::Analyze(a) => analyze(a),
        Command::Compare(a) => compare(a),
        Command::Gen(a) => gen(a),
        Command::Bench(a) => bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("sgcc: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_input(path: &Path) -> Result<(SignedGraph, String), Failure> {
    let bytes = std::fs::read(path)
        .map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Failure::new(EXIT_PARSE, format!("{}: not UTF-8 text", path.display())))?;
    let g = parse_graph(&text).map_err(|e| {
        let f = Failure::from(e);
        Failure::new(f.code, format!("{}: {}", path.display(), f.message))
    })?;
    let checksum = format!("sha256:{}", hex::encode(Sha256::digest(&bytes)));
    Ok((g, checksum))
}

/// Writes through a temporary file in the destination directory so a failed
/// run never leaves a partial file behind.
fn emit(out: &Output, text: &str) -> Outcome {
    let io_err = |e: std::io::Error| Failure::new(EXIT_IO, e.to_string());
    match &out.output {
        None => std::io::stdout().write_all(text.as_bytes()).map_err(io_err),
        Some(path) => {
            let dir = match path.parent() {
                Some(p) if !p.as_os_str().is_empty() => p,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)
                .map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", dir.display())))?;
            tmp.write_all(text.as_bytes()).map_err(io_err)?;
            tmp.persist(path)
                .map_err(|e| Failure::new(EXIT_IO, format!("{}: {}", path.display(), e.error)))?;
            Ok(())
        }
    }
}

fn emit_report(out: &Output, report: &ResultFile) -> Outcome {
    let mut text = serde_json::to_string_pretty(report)
        .map_err(|e| Failure::new(EXIT_INVARIANT, e.to_string()))?;
    text.push('\n');
    emit(out, &text)
}

/// Runs the pipeline and checks its output independently; a panic inside
/// the pipeline counts as an invariant breach.
fn checked_run(g: &SignedGraph, options: CcOptions) -> Result<CcOutcome, Failure> {
    let previous = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let run = panic::catch_unwind(AssertUnwindSafe(|| run_cc_with(g, options)));
    panic::set_hook(previous);
    let outcome = run.map_err(|p| {
        let what = p
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| p.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "pipeline panicked".into());
        Failure::new(EXIT_INVARIANT, format!("invariant breach: {what}"))
    })?;
    let mut seen = vec![false; g.vertex_count()];
    for c in outcome.clustering.clusters() {
        for &v in c {
            if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Failure::new(
                    EXIT_INVARIANT,
                    "invariant breach: clusters overlap",
                ));
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Failure::new(
            EXIT_INVARIANT,
            "invariant breach: clusters miss a vertex",
        ));
    }
    Ok(outcome)
}

fn sorted_clusters(outcome: &CcOutcome) -> Vec<Vec<usize>> {
    // clustering clusters are already ordered by their smallest vertex
    outcome
        .clustering
        .clusters()
        .iter()
        .map(|c| report::one_based(c))
        .collect()
}

fn pipeline_block(
    g: &SignedGraph,
    outcome: &CcOutcome,
    report: &mut ResultFile,
    trace: bool,
) -> Outcome {
    let d = count_disagreements(g, &outcome.clustering)?;
    if d.total != d.negative_inside.len() + d.positive_across.len() {
        return Err(Failure::new(
            EXIT_INVARIANT,
            "invariant breach: totals disagree",
        ));
    }
    report.clusters = Some(sorted_clusters(outcome));
    report.disagreements = Some(Disagreements::from(&d));
    if trace {
        report.trace = Some(trace_entries(&outcome.trace));
    }
    Ok(())
}

fn analysis(g: &SignedGraph, args: &CycleArgs) -> Result<Analysis, Failure> {
    let bound = match args.max_cycle_length {
        Some(l) => CycleBound::new(l, args.allow_truncated),
        None => CycleBound::complete(g),
    };
    bound.check(g)?;
    let clusterability = is_clusterable(g);
    let wncs = enumerate_weakly_negative_cycles(g, bound.max_length);
    let packing = pack_cycles(&wncs);
    let condition = find_adjacent_triple(&wncs);
    let triangle = triangle_condition_check(g);
    let hits = forbidden_subgraph_scan(g, &ForbiddenPattern::all());
    Ok(Analysis::from(AnalysisParts {
        clusterability: &clusterability,
        max_cycle_length: bound.max_length,
        enumeration_complete: bound.is_complete_for(g),
        weakly_negative_cycles: wncs.len(),
        packing: &packing,
        triangle: &triangle,
        condition: &condition,
        hits: &hits,
    }))
}

fn cluster(a: ClusterArgs) -> Outcome {
    let (g, checksum) = read_input(&a.input)?;
    let mut report = ResultFile::new("cluster", checksum, g.vertex_count(), g.edge_count());
    if a.with_analysis {
        report.analysis = Some(analysis(&g, &a.cycles)?);
    }
    let outcome = checked_run(
        &g,
        CcOptions {
            post_merge: a.post_merge,
        },
    )?;
    pipeline_block(&g, &outcome, &mut report, a.trace)?;
    emit_report(&a.out, &report)
}

fn analyze(a: AnalyzeArgs) -> Outcome {
    let (g, checksum) = read_input(&a.input)?;
    let mut report = ResultFile::new("analyze", checksum, g.vertex_count(), g.edge_count());
    report.analysis = Some(analysis(&g, &a.cycles)?);
    emit_report(&a.out, &report)
}

fn compare(a: CompareArgs) -> Outcome {
    let (g, checksum) = read_input(&a.input)?;
    let mut report = ResultFile::new("compare", checksum, g.vertex_count(), g.edge_count());
    let optimum = brute_force_optimum(&g, a.oracle_limit)?;
    let outcome = checked_run(&g, CcOptions::default())?;
    pipeline_block(&g, &outcome, &mut report, a.trace)?;
    let approx = approximation_report_for(&g, &optimum)?;
    report.oracle = Some(OracleBlock::new(
        &approx,
        optimum.clustering.clusters(),
        &optimum.deletion_set,
    ));
    emit_report(&a.out, &report)?;
    if approx.zero_guarantee_failed() {
        return Err(Failure::new(
            EXIT_INVARIANT,
            format!(
                "clusterable input but the pipeline scored {}",
                approx.solution
            ),
        ));
    }
    if approx.violates_two_approximation() {
        return Err(Failure::new(
            EXIT_RATIO,
            format!(
                "subclass instance with solution {} above twice the optimum {}",
                approx.solution, approx.optimum
            ),
        ));
    }
    Ok(())
}

fn default_p_edge(n: usize) -> f64 {
    if n <= 1 {
        1.0
    } else {
        (3.0 / (n - 1) as f64).min(1.0)
    }
}

fn gen(a: GenArgs) -> Outcome {
    let need_n = || {
        a.n.ok_or_else(|| Failure::new(EXIT_USAGE, "this kind needs -n <vertices>"))
    };
    let (g, comment) = match a.kind {
        Kind::Subclass => {
            let n = need_n()?;
            let p = a.p_edge.unwrap_or_else(|| default_p_edge(n));
            let (g, stats) = generate_subclass_instance(n, p, a.p_neg, a.seed, a.budget)?;
            eprintln!(
                "accepted after {} attempts ({} rejected)",
                stats.attempts, stats.rejected
            );
            let c = format!(
                "subclass n={n} p_edge={p} p_neg={} seed={} attempts={}",
                a.p_neg, a.seed, stats.attempts
            );
            (g, c)
        }
        Kind::Random => {
            let n = need_n()?;
            let p = a.p_edge.unwrap_or_else(|| default_p_edge(n));
            let g = generate_random(n, p, a.p_neg, a.seed)?;
            (
                g,
                format!("random n={n} p_edge={p} p_neg={} seed={}", a.p_neg, a.seed),
            )
        }
        Kind::Clusterable => {
            if a.sizes.is_empty() {
                return Err(Failure::new(
                    EXIT_USAGE,
                    "clusterable needs --sizes a,b,...",
                ));
            }
            let p = a.p_edge.unwrap_or(0.7);
            let g = generate_clusterable_instance(&a.sizes, p, a.seed)?;
            let sizes: Vec<String> = a.sizes.iter().map(|s| s.to_string()).collect();
            (
                g,
                format!(
                    "clusterable sizes={} p_edge={p} seed={}",
                    sizes.join(","),
                    a.seed
                ),
            )
        }
    };
    emit(&a.out, &write_graph(&g, &[comment]))
}

fn bench(a: BenchArgs) -> Outcome {
    let r = signed_cc::bench::run_bench(&a.sizes, a.density, a.seed, a.repeats);
    println!(
        "{:>8} {:>10} {:>12} {:>9}",
        "n", "edges", "seconds", "clusters"
    );
    for row in &r.rows {
        println!(
            "{:>8} {:>10} {:>12.6} {:>9}",
            row.n, row.edges, row.seconds, row.clusters
        );
    }
    match r.exponent {
        Some(e) => println!("fitted exponent {e:.3}"),
        None => println!("fitted exponent n/a"),
    }
    Ok(())
}
