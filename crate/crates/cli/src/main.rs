//! `rainbow`: command-line front end for the local rainbow coloring toolkit.

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug, Serialize)]
#[command(name = "rainbow", version, about = "Local rainbow colorings of uniform hypergraphs")]
pub struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; `RAINBOW_THREADS` is used when absent.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Where to write the main artifact; JSON goes to stdout otherwise.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Classify every r-graph with a given number of edges as 2LL or not.
    Classify(ClassifyArgs),
    /// Decide whether one hypergraph is 2-locally large.
    Decide2ll(PatternArgs),
    /// Build a coloring family and write it as an RLCF file.
    Construct(ConstructArgs),
    /// Product-lift a family through anchor vertices.
    Lift(LiftArgs),
    /// Search for a (p,q)-coloring of the t-sets.
    Pqsearch(PqArgs),
    /// Check a family against every copy of a pattern.
    Verify(VerifyArgs),
    /// Run a structured witness search against a family.
    Attack(AttackArgs),
    /// Decide whether a local coloring with k colors exists.
    Solve(SolveArgs),
    /// Find a sunflower in a hypergraph.
    Sunflower(SunflowerArgs),
    /// Turn weight-r cube vectors into an r-graph.
    Bridge(BridgeArgs),
    /// Run a registered reproduction check.
    Reproduce(ReproduceArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct ClassifyArgs {
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    #[arg(long)]
    pub edges: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct PatternArgs {
    /// Family id such as `sp3` or `sunflower(1,4)`, or a hypergraph JSON file.
    #[arg(long)]
    pub pattern: String,
    #[arg(long, default_value_t = 3)]
    pub r: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Deterministic,
    Lll,
    Tce,
    Constant,
}

#[derive(Args, Debug, Serialize)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub method: Method,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    /// Pattern size for `lll`.
    #[arg(long)]
    pub h: Option<usize>,
    /// Color count for `lll`, overriding the formula.
    #[arg(long)]
    pub k: Option<u32>,
    /// Base order for `deterministic`, as comma-separated vertices from lowest rank up.
    #[arg(long, value_delimiter = ',')]
    pub order: Option<Vec<usize>>,
    /// Resampling budget for `lll`, search budget for `tce`.
    #[arg(long)]
    pub budget: Option<u64>,
    /// (4,3)-coloring file for `tce`.
    #[arg(long)]
    pub gamma: Option<PathBuf>,
    /// (5,4)-coloring file for `tce`.
    #[arg(long)]
    pub rho: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct LiftArgs {
    #[arg(long)]
    pub family: PathBuf,
    /// Distinct anchor vertices, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub anchors: Vec<usize>,
}

#[derive(Args, Debug, Serialize)]
pub struct PqArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
    /// Search with exactly this many colors instead of minimizing.
    #[arg(long)]
    pub k_max: Option<u32>,
    #[arg(long, default_value_t = 2_000_000)]
    pub budget: u64,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    #[arg(long)]
    pub family: PathBuf,
    /// Family id or hypergraph JSON file.
    #[arg(long)]
    pub pattern: String,
}

#[derive(Args, Debug, Serialize)]
pub struct AttackArgs {
    #[arg(long)]
    pub family: PathBuf,
    /// One of `sp3`, `sunflower(d,t)`, `clique(p)`, `sp4_1`, `sp4_2`.
    #[arg(long)]
    pub pattern: String,
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Args, Debug, Serialize)]
pub struct SolveArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    #[arg(long)]
    pub pattern: String,
    /// Decide this color count; without it the minimum is bracketed.
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, default_value_t = 8)]
    pub k_max: u32,
    #[arg(long, default_value_t = 10_000_000)]
    pub budget: u64,
    /// Where to write the satisfying family; defaults to the certificate path with `.rlcf`.
    #[arg(long)]
    pub family_out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct SunflowerArgs {
    /// Hypergraph JSON file, or a family id.
    #[arg(long)]
    pub graph: Option<String>,
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    /// Draw a random r-graph with this many vertices instead.
    #[arg(long)]
    pub random_n: Option<usize>,
    /// Edge count of the random r-graph; defaults to the Erdős–Rado bound.
    #[arg(long)]
    pub random_edges: Option<usize>,
    #[arg(long, default_value_t = 4)]
    pub petals: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct BridgeArgs {
    /// Comma-separated 0/1 vectors.
    #[arg(long, value_delimiter = ',')]
    pub vectors: Option<Vec<String>>,
    /// File with one vector per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct ReproduceArgs {
    /// Claim id; `all` runs every registered claim.
    pub claim: String,
}

fn threads(cli: &Cli) -> Result<usize, String> {
    if let Some(t) = cli.threads {
        return Ok(t.max(1));
    }
    match std::env::var("RAINBOW_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|t| t.max(1))
            .map_err(|_| format!("RAINBOW_THREADS must be a positive integer, got `{v}`")),
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = match threads(&cli) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    match pool.install(|| commands::run(&cli, workers)) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
