//! `latharm`: dimensions, Hilbert series, Frobenius characteristics and
//! verification sweeps for Y-free lattice-diagram harmonics.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::RangedU64ValueParser;
use clap::{Parser, Subcommand, ValueEnum};

use lattice_harmonics::cache::HilbertCache;
use lattice_harmonics::par;
use lattice_harmonics::properties::DEFAULT_SEED;
use lattice_harmonics::shapes::{Cell, Partition};
use lattice_harmonics::verify::{OracleBudget, Suite};
use lattice_harmonics::Error;

#[derive(Parser, Debug)]
#[command(name = "latharm", version, about = "Y-free lattice-diagram harmonics at q = 0")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// JSON-lines cache of Y-free Hilbert series.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Worker threads; 1 runs sequentially.
    #[arg(long, global = true, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    jobs: Option<usize>,

    /// Seed for the randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Largest number of cells of mu for brute-force Y-free spaces.
    #[arg(long, global = true)]
    oracle_cells: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form dimension against basis cardinality and brute force.
    Dim {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Also list the basis polynomials.
        #[arg(long)]
        show_basis: bool,
    },
    /// t-graded Hilbert series of the Y-free component.
    Hilbert {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Graded Frobenius characteristic in the Schur basis.
    Frobenius {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 4, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
        max_n: usize,
        /// Cases per randomized property.
        #[arg(long, default_value_t = 1000)]
        cases: usize,
    },
}

#[derive(clap::Args, Debug)]
struct ShapeArgs {
    /// Partition such as 4,2,1.
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,
    /// Cell removed from mu, as row,col from the bottom left.
    #[arg(long, value_parser = parse_cell)]
    hole: Option<Cell>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_cell(s: &str) -> Result<Cell, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Why a command stopped: bad input, or a computation that went wrong.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CellOutside(..) | Error::Parse(_) | Error::InvalidPartition(_) | Error::Io(_) | Error::Json(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

pub struct Context {
    pub format: Format,
    pub budget: OracleBudget,
    pub seed: u64,
    pub cache: HilbertCache,
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let mut budget = OracleBudget::default();
    if let Some(k) = cli.oracle_cells {
        if k != budget.y_free_cells {
            eprintln!("warning: Y-free oracle budget set to {k} cells (default {})", budget.y_free_cells);
        }
        budget.y_free_cells = k;
    }
    let cache = match &cli.cache {
        Some(p) => HilbertCache::open(p)?,
        None => HilbertCache::in_memory(),
    };
    let ctx = Context { format: cli.format, budget, seed: cli.seed, cache };
    let go = || match cli.command {
        Command::Dim { shape, show_basis } => report::dim(&ctx, &shape.mu, shape.hole, show_basis),
        Command::Hilbert { shape } => report::hilbert(&ctx, &shape.mu, shape.hole),
        Command::Frobenius { shape } => report::frobenius(&ctx, &shape.mu, shape.hole),
        Command::Verify { suite, max_n, cases } => report::verify(&ctx, suite, max_n, cases),
    };
    match cli.jobs {
        Some(n) => par::with_threads(n, go),
        None => go(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
