//! `kconn`: decompose a graph file, generate graphs, or run benchmarks.
//!
//! Exit codes: 0 success, 1 bad input, 2 internal invariant violation,
//! 3 fast and reference answers diverge.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kconn::io::{self, BenchPlan, Family, Format, GraphFile};
use kconn::solvers::{self, Algorithm, Mode, SolverConfig};
use kconn::Error;

#[derive(Parser, Debug)]
#[command(name = "kconn", version, about = "Maximal 2-edge, 2-vertex and k-edge connected subgraphs")]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    solve: SolveArgs,
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// 2ecs, 2vcs, kecs or kecs-undirected.
    #[arg(long, required = true)]
    mode: Option<Mode>,
    /// Connectivity for the k-edge modes.
    #[arg(short)]
    k: Option<usize>,
    /// Search budget; defaults to floor(sqrt(m)), or ceil(m / sqrt(n)) for
    /// undirected graphs.
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long, value_enum, default_value = "fast")]
    algorithm: AlgorithmArg,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Append solver counters to text output as `# name value` lines.
    #[arg(long)]
    stats: bool,
    /// Also list vertices outside every component (edge modes only).
    #[arg(long)]
    include_singletons: bool,
    /// Graph file, or `-` for standard input.
    #[arg(required = true)]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated graph in graph file format.
    Gen(GenArgs),
    /// Time fast and baseline solvers on generated graphs and write CSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgorithmArg {
    Fast,
    Baseline,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    CycleChain,
    RandomDigraph,
    PlantedCliques,
    Bidirected,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Vertices (random-digraph, bidirected).
    #[arg(long, default_value_t = 100)]
    n: usize,
    /// Edges (random-digraph) or vertex pairs (bidirected).
    #[arg(long, default_value_t = 300)]
    m: usize,
    #[arg(long, default_value_t = 10)]
    cycles: usize,
    #[arg(long, default_value_t = 8)]
    len: usize,
    #[arg(long, default_value_t = 2)]
    cliques: usize,
    #[arg(long, default_value_t = 4)]
    size: usize,
    #[arg(long, default_value_t = 2)]
    bridges: usize,
    /// Output file; standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// CSV output file.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "2ecs")]
    modes: Vec<Mode>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "cycle-chain")]
    families: Vec<FamilyArg>,
    /// Approximate edge counts.
    #[arg(long, value_delimiter = ',', default_value = "1000,4000,16000")]
    sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    seeds: Vec<u64>,
    #[arg(short, default_value_t = 3)]
    k: usize,
    /// Run the baseline only on graphs with at most this many edges.
    #[arg(long, default_value_t = 20_000)]
    baseline_max_m: usize,
    /// Compare answers on graphs with at most this many vertices.
    #[arg(long, default_value_t = 200)]
    oracle_max_n: usize,
}

fn read_input(path: &PathBuf) -> Result<String, Error> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn solve(args: SolveArgs) -> Result<String, Error> {
    let mode = args.mode.expect("required by clap");
    let k = match (mode, args.k) {
        (Mode::KEdge | Mode::KEdgeUndirected, None) => {
            return Err(Error::InvalidParameter(format!("mode {mode} needs -k")));
        }
        (_, k) => k.unwrap_or(2),
    };
    let text = read_input(args.file.as_ref().expect("required by clap"))?;
    let graph = io::parse_graph(&text)?;
    let cfg = SolverConfig {
        delta: args.delta,
        include_singletons: args.include_singletons,
    };
    let algorithm = match args.algorithm {
        AlgorithmArg::Fast => Algorithm::Fast,
        AlgorithmArg::Baseline => Algorithm::Baseline,
    };
    let report = match graph {
        GraphFile::Undirected { n, edges } => {
            if mode == Mode::KEdgeUndirected && algorithm == Algorithm::Fast {
                solvers::max_kecs_undirected_with(n, &edges, k, &cfg)?
            } else {
                solvers::solve(&solvers::bidirect(n, &edges)?, mode, k, algorithm, &cfg)?
            }
        }
        GraphFile::Directed(g) => {
            if mode == Mode::KEdgeUndirected {
                return Err(Error::InvalidParameter("kecs-undirected needs an undirected graph file".into()));
            }
            solvers::solve(&g, mode, k, algorithm, &cfg)?
        }
    };
    let mut out = match args.format {
        FormatArg::Text => io::emit_report(&report, Format::Text),
        FormatArg::Json => io::emit_report(&report, Format::Json),
    };
    if args.stats && matches!(args.format, FormatArg::Text) {
        out.push_str(&io::emit_stats(&report.stats));
    }
    Ok(out)
}

fn family(name: FamilyArg, a: &GenArgs) -> Family {
    match name {
        FamilyArg::CycleChain => Family::CycleChain { cycles: a.cycles, len: a.len },
        FamilyArg::RandomDigraph => Family::RandomDigraph { n: a.n, m: a.m },
        FamilyArg::PlantedCliques => Family::PlantedCliques {
            cliques: a.cliques,
            size: a.size,
            bridges: a.bridges,
        },
        FamilyArg::Bidirected => Family::Bidirected { n: a.n, m: a.m },
    }
}

fn write_out(path: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn gen(args: GenArgs) -> Result<(), Error> {
    let g = io::generate(family(args.family, &args), args.seed)?;
    write_out(args.out.as_ref(), &io::write_graph(&g))
}

// Family members with roughly `m` edges.
fn sized(name: FamilyArg, m: usize, k: usize) -> Family {
    match name {
        FamilyArg::CycleChain => Family::CycleChain { cycles: (m / 10).max(1), len: 8 },
        FamilyArg::RandomDigraph => Family::RandomDigraph { n: (m / 3).max(2), m },
        FamilyArg::PlantedCliques => {
            let size = k + 3;
            let bridges = k - 1;
            let per = size * (size - 1) + 2 * bridges;
            Family::PlantedCliques { cliques: (m / per).max(1), size, bridges }
        }
        FamilyArg::Bidirected => Family::Bidirected { n: (m / 6).max(2), m: m / 2 },
    }
}

fn threads() -> usize {
    let available = std::thread::available_parallelism().map_or(1, |n| n.get());
    match std::env::var("KCONN_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        Some(cap) if cap >= 1 => cap.min(available),
        _ => available,
    }
}

fn bench(args: BenchArgs) -> Result<(), Error> {
    if args.k < 2 {
        return Err(Error::InvalidParameter("k must be at least 2".into()));
    }
    let mut families = Vec::new();
    for &f in &args.families {
        for &m in &args.sizes {
            families.push(sized(f, m, args.k));
        }
    }
    let plan = BenchPlan {
        modes: args.modes,
        k: args.k,
        families,
        seeds: args.seeds,
        baseline_max_m: args.baseline_max_m,
        oracle_max_n: args.oracle_max_n,
        threads: threads(),
    };
    let records = io::run_benchmark(&plan)?;
    let file = std::fs::File::create(&args.out).map_err(|e| Error::Io(format!("{}: {e}", args.out.display())))?;
    io::write_csv(&records, std::io::BufWriter::new(file))?;
    eprintln!("wrote {} rows to {}", records.len(), args.out.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Some(Command::Gen(a)) => gen(a),
        Some(Command::Bench(a)) => bench(a),
        None => solve(cli.solve).and_then(|out| write_out(None, &out)),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("kconn: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
