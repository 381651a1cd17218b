//! `ncsym`: command-line front end for the ncsym library.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ncsym::chromatic::{ChromaticEngine, Route};
use ncsym::graph::{parse_graph, parse_usize_list, Family, LabeledMultigraph};
use ncsym::ncsym::Basis;
use ncsym::{Error, Limits};

#[derive(Parser, Debug)]
#[command(name = "ncsym", version, about = "Chromatic functions in noncommuting variables")]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,
    #[command(subcommand)]
    command: Command,
}

/// Settings shared by every subcommand.
#[derive(Args, Debug, Clone)]
struct ConfigArgs {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text, env = "NCSYM_FORMAT")]
    format: Format,
    /// Seed for randomized corpora and edge orders.
    #[arg(long, global = true, default_value_t = 7, env = "NCSYM_SEED")]
    seed: u64,
    /// Largest degree for lattice walks.
    #[arg(long, global = true, env = "NCSYM_GUARD_DEGREE", value_parser = clap::value_parser!(u64).range(1..))]
    guard_degree: Option<u64>,
    /// Largest edge count for subset sums and orientation enumeration.
    #[arg(long, global = true, env = "NCSYM_GUARD_EDGES", value_parser = clap::value_parser!(u64).range(1..))]
    guard_edges: Option<u64>,
    /// Largest word count for truncated word expansions.
    #[arg(long, global = true, env = "NCSYM_GUARD_WORDS", value_parser = clap::value_parser!(u64).range(1..))]
    guard_words: Option<u64>,
    /// Largest `n^d` for brute-force coloring counts.
    #[arg(long, global = true, env = "NCSYM_GUARD_COLORINGS", value_parser = clap::value_parser!(u64).range(1..))]
    guard_colorings: Option<u64>,
    /// Largest vertex count for isomorphism tests.
    #[arg(long, global = true, env = "NCSYM_GUARD_ISOMORPHISM", value_parser = clap::value_parser!(u64).range(1..))]
    guard_isomorphism: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Where the graph comes from: a file, or a named family.
#[derive(Args, Debug, Clone)]
struct GraphArgs {
    /// Graph file in JSON or line format; `-` reads stdin.
    #[arg(long, env = "NCSYM_GRAPH", conflicts_with = "family")]
    graph: Option<String>,
    /// One of path, cycle, complete, complete-minus-edge, empty, diamond,
    /// chain, indifference.
    #[arg(long, env = "NCSYM_FAMILY")]
    family: Option<String>,
    #[arg(long, env = "NCSYM_D")]
    d: Option<usize>,
    /// Clique sizes for `chain`, e.g. `3,2,2`.
    #[arg(long, env = "NCSYM_ALPHA")]
    alpha: Option<String>,
    /// Intervals for `indifference`, e.g. `1-3,2-4`.
    #[arg(long, env = "NCSYM_INTERVALS")]
    intervals: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print Y_G in a chosen basis.
    Expand {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value = "m", value_parser = parse_basis, env = "NCSYM_BASIS")]
        basis: Basis,
        #[arg(long, default_value = "stable", value_parser = parse_route, env = "NCSYM_ROUTE")]
        route: Route,
        /// Recompute by every route and compare.
        #[arg(long)]
        check_all: bool,
    },
    /// Class expansion modulo a marked index, or a search for a labeling
    /// with nonnegative classes.
    Positivity {
        #[command(flatten)]
        graph: GraphArgs,
        /// Use this index in the given labeling instead of searching.
        #[arg(long, env = "NCSYM_MOD_INDEX")]
        mod_index: Option<usize>,
        /// Maximum number of relabelings to try.
        #[arg(long, env = "NCSYM_BUDGET")]
        budget: Option<usize>,
    },
    /// Acyclic orientations and sink counts, by enumeration and from the
    /// e-expansion.
    Orientations {
        #[command(flatten)]
        graph: GraphArgs,
        /// Vertex whose unique-sink count is reported.
        #[arg(long, default_value_t = 1)]
        vertex: usize,
    },
    /// The chromatic polynomial and its coefficients.
    Chromatic {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Recover a simple graph from its m-expansion (JSON, `-` for stdin).
    Reconstruct { input: String },
    /// Compare X_T over all trees on d vertices.
    Trees {
        #[arg(long, env = "NCSYM_D")]
        d: usize,
    },
    /// Run a verification suite: all, bases, delcon, sinks, positivity,
    /// families or reconstruction.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_route(s: &str) -> Result<Route, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Resolved run settings.
pub struct RunConfig {
    pub format: Format,
    pub seed: u64,
    pub limits: Limits,
}

impl RunConfig {
    fn from_args(a: &ConfigArgs) -> RunConfig {
        let mut limits = Limits::default();
        if let Some(v) = a.guard_degree {
            limits.degree = v as usize;
        }
        if let Some(v) = a.guard_edges {
            limits.edge_subsets = v as usize;
        }
        if let Some(v) = a.guard_words {
            limits.words = v as u128;
        }
        if let Some(v) = a.guard_colorings {
            limits.colorings = v as u128;
        }
        if let Some(v) = a.guard_isomorphism {
            limits.isomorphism = v as usize;
        }
        RunConfig {
            format: a.format,
            seed: a.seed,
            limits,
        }
    }

    fn json(&self) -> bool {
        self.format == Format::Json
    }
}

/// Why a command stopped early.
#[derive(Debug)]
pub enum Failure {
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(Error::GuardExceeded { .. }) => 3,
            Failure::Lib(Error::Inconsistent(_)) => 1,
            Failure::Lib(_) | Failure::Usage(_) => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Usage(s) => f.write_str(s),
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::Usage(format!("stdin: {e}")))
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }
}

fn parse_intervals(s: &str) -> Result<Vec<(usize, usize)>, Failure> {
    s.split(',')
        .map(|t| {
            let (a, b) = t
                .trim()
                .split_once('-')
                .ok_or_else(|| Failure::Usage(format!("interval {t:?} is not of the form k-l")))?;
            let num = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Failure::Usage(format!("bad interval endpoint {x:?}")))
            };
            Ok((num(a)?, num(b)?))
        })
        .collect()
}

impl GraphArgs {
    fn load(&self) -> Result<LabeledMultigraph, Failure> {
        if let Some(path) = &self.graph {
            return Ok(parse_graph(&read_input(path)?)?);
        }
        let Some(name) = &self.family else {
            return Err(Failure::Usage("give --graph FILE or --family NAME".into()));
        };
        let alpha = self.alpha.as_deref().map(parse_usize_list).transpose()?;
        let intervals = self.intervals.as_deref().map(parse_intervals).transpose()?;
        Ok(Family::from_parts(name, self.d, alpha.as_deref(), intervals.as_deref())?.build()?)
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let cfg = RunConfig::from_args(&cli.config);
    let eng = ChromaticEngine::new(cfg.limits);
    match cli.command {
        Command::Expand {
            graph,
            basis,
            route,
            check_all,
        } => commands::expand(&cfg, &eng, &graph.load()?, basis, route, check_all),
        Command::Positivity {
            graph,
            mod_index,
            budget,
        } => commands::positivity(&cfg, &eng, &graph.load()?, mod_index, budget),
        Command::Orientations { graph, vertex } => {
            commands::orientations(&cfg, &eng, &graph.load()?, vertex)
        }
        Command::Chromatic { graph } => commands::chromatic(&cfg, &eng, &graph.load()?),
        Command::Reconstruct { input } => commands::reconstruct(&cfg, &read_input(&input)?),
        Command::Trees { d } => commands::trees(&cfg, &eng, d),
        Command::Verify { suite } => commands::verify(&cfg, &eng, &suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("ncsym: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
