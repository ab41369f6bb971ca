mod commands;
mod io;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use holeforge_core::lab::CorpusKind;

use crate::io::{Format, InputArgs};

#[derive(Debug, Parser)]
#[command(name = "holeforge", version, about = "Exact computations on graphs without long holes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
    /// Worker threads; output stays in input order
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,
    /// Vertex cap for exponential solvers (each command has its own default)
    #[arg(long, env = "HOLEFORGE_VCAP", value_parser = clap::value_parser!(u64).range(1..))]
    pub vcap: Option<u64>,
    /// Per-graph time limit in seconds for exact solvers
    #[arg(long, env = "HOLEFORGE_TIMEOUT")]
    pub timeout: Option<f64>,
    /// Maximum number of induced cycles to enumerate
    #[arg(long, default_value_t = holeforge_core::holes::DEFAULT_CYCLE_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub cycle_cap: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Clique, chromatic, stability and clique cover numbers
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Membership in chordal, long-hole-free, perfect and related classes
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Levelling colouring of graphs without holes of length at least 5
    Color {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
        /// Skip the long-hole check; a violation found on the way exits with 3
        #[arg(long)]
        trust: bool,
        /// Re-check properness and the palette bound, and report the exact chromatic number
        #[arg(long)]
        verify: bool,
    },
    /// Perfect chromatic number with bounds and a witness partition
    Chip {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Exhaustive niceness check
    Nice {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Gyarfas slack and anticomplete odd holes
    Slack {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Conjecture sweeps and the search for large chromatic number
    Search {
        #[command(subcommand)]
        mode: SearchMode,
    },
    /// Check that no input graph is an induced subgraph of another
    Antichain {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
        /// Use the connected 4-regular graphs on N vertices instead of the input
        #[arg(long, value_name = "N")]
        four_regular: Option<usize>,
    },
    /// Generate a seeded corpus as graph6 lines
    Corpus {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        /// Exhaustive kind only: keep graphs without long holes
        #[arg(long)]
        long_hole_free: bool,
    },
    /// Convert between graph6, edge lists and JSON
    Convert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "graph6")]
        to: ConvertTo,
    },
}

#[derive(Debug, Subcommand)]
pub enum SearchMode {
    /// Bipartition and chi <= omega^2 checks, one row per input graph
    Conjectures {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Largest chromatic number found at a fixed clique number
    F {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value_t = 4)]
        omega: usize,
        #[arg(long, default_value_t = 7)]
        exhaustive_max_n: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 24)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    RandomChordal,
    RandomLongHoleFree,
    SubstitutionClosure,
    Exhaustive,
}

impl From<KindArg> for CorpusKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::RandomChordal => CorpusKind::RandomChordal,
            KindArg::RandomLongHoleFree => CorpusKind::RandomLongHoleFree,
            KindArg::SubstitutionClosure => CorpusKind::SubstitutionClosure,
            KindArg::Exhaustive => CorpusKind::Exhaustive,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ConvertTo {
    Graph6,
    Edges,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze { input, run } => commands::analyze(&input, &run),
        Command::Classify { input, run } => commands::classify(&input, &run),
        Command::Color { input, run, trust, verify } => commands::color(&input, &run, trust, verify),
        Command::Chip { input, run } => commands::chip(&input, &run),
        Command::Nice { input, run } => commands::nice(&input, &run),
        Command::Slack { input, run } => commands::slack(&input, &run),
        Command::Search { mode: SearchMode::Conjectures { input, run } } => commands::conjectures(&input, &run),
        Command::Search { mode: SearchMode::F { run, omega, exhaustive_max_n, trials, max_n } } => {
            commands::f_search(&run, omega, exhaustive_max_n, trials, max_n)
        }
        Command::Antichain { input, run, four_regular } => commands::antichain(&input, &run, four_regular),
        Command::Corpus { run, kind, count, min_n, max_n, long_hole_free } => {
            commands::corpus(&run, kind.into(), count, min_n, max_n, long_hole_free)
        }
        Command::Convert { input, to } => commands::convert(&input, to),
    };
    ExitCode::from(code)
}
