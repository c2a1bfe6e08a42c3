//! `hit`: heights, factorization, Galois groups, transforms, specialization
//! censuses and bound kernels over Q and F_q(u).

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hit_core::census::{CensusKind, WITNESS_CAP};
use hit_core::HitError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Hit(#[from] HitError),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
    /// A replayed report differs from the stored one.
    #[error("replay mismatch: {0}")]
    Mismatch(String),
    /// A census count exceeded its kernel.
    #[error("kernel violated: {0}")]
    Violation(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Hit(e) if !e.is_validation() => 1,
            CliError::Mismatch(_) | CliError::Violation(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "hit",
    version,
    about = "Effective Hilbert irreducibility toolkit over Q and F_q(u)"
)]
struct Cli {
    /// Worker threads for censuses (default: all cores).
    #[arg(long, env = "HC_THREADS", global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct PolyArgs {
    /// `Q` or `FqU:q=<prime power>`.
    #[arg(long, default_value = "Q")]
    pub field: String,
    /// Polynomial in T and Y (and u over F_q(u)), e.g. "Y^2 - T".
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
}

#[derive(Args, Debug, Clone, Default)]
pub struct OutArgs {
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    /// Witness table (censuses only).
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KindArg {
    /// `N_F(B)`: t with F(t, Y) reducible over K.
    Reducible,
    /// t with P(t, Y) having a root in O_K.
    Introots,
    /// `E_F(B)`: t with G_t != G.
    Galois,
}

impl From<KindArg> for CensusKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Reducible => CensusKind::Reducible,
            KindArg::Introots => CensusKind::Introots,
            KindArg::Galois => CensusKind::Galois,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct CensusArgs {
    #[arg(value_enum)]
    pub kind: KindArg,
    #[command(flatten)]
    pub poly: PolyArgs,
    /// Box bound: a positive rational over Q, `q^n` (or its value) over F_q(u).
    #[arg(long = "box")]
    pub box_bound: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = WITNESS_CAP)]
    pub witness_cap: usize,
    /// Split the box into this many consecutive shards...
    #[arg(long, requires = "shard")]
    pub shards: Option<u64>,
    /// ...and enumerate only this one (0-based).
    #[arg(long, requires = "shards")]
    pub shard: Option<u64>,
    /// Cross-check each specialization's group by Dedekind sampling at this many primes (Q only).
    #[arg(long, default_value_t = 0)]
    pub dedekind: usize,
    /// Record wall-clock time in the report.
    #[arg(long)]
    pub timing: bool,
    #[command(flatten)]
    pub output: OutArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hit3Arg {
    Exceptional,
    Reducible,
}

#[derive(Args, Debug, Clone)]
pub struct BoundArgs {
    /// hit01, hilbert1, hilbert35, hilbert7, hit3 or bp.
    #[arg(long)]
    pub theorem: String,
    #[arg(long, default_value = "Q")]
    pub field: String,
    /// Take d_Y, d_T, H (and the bp heights and generic group when needed) from this polynomial.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
    #[arg(long = "dY")]
    pub d_y: Option<u32>,
    #[arg(long = "dT")]
    pub d_t: Option<u32>,
    /// Height H_K(F) (>= 1).
    #[arg(long = "H")]
    pub h: Option<f64>,
    /// Box bound B.
    #[arg(long = "B")]
    pub b: f64,
    /// Total degree for bp.
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long = "H-aff")]
    pub h_aff: Option<f64>,
    /// Height of the top homogeneous part; selects the first bp display.
    #[arg(long = "H-top")]
    pub h_top: Option<f64>,
    #[arg(long = "b-of-p")]
    pub b_of_p: Option<f64>,
    /// Group label (C2, S3, V4, ...).
    #[arg(long)]
    pub group: Option<String>,
    /// Subgroup label for hilbert7.
    #[arg(long)]
    pub subgroup: Option<String>,
    #[arg(long, value_enum, default_value_t = Hit3Arg::Exceptional)]
    pub hit3: Hit3Arg,
    #[command(flatten)]
    pub output: OutArgs,
}

#[derive(Subcommand, Debug)]
pub enum ConstructCmd {
    /// `a_0^{d_Y - 1} F(T, Y / a_0)`.
    Monicize {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// `P(T, T^E + Y)`; E defaults to the height-based exponent.
    Shift {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        e: Option<u64>,
    },
    /// Subset resolvent R_{m,j} of a monic F.
    Resolvent {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        j: usize,
    },
    /// Discriminant in Y as a polynomial in T.
    Discriminant {
        #[command(flatten)]
        poly: PolyArgs,
    },
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and print a polynomial in canonical form.
    Parse {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        output: OutArgs,
    },
    /// Projective and affine heights.
    Height {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        output: OutArgs,
    },
    /// Factor in K[T, Y].
    Factor {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutArgs,
    },
    /// Galois group over K(T), or of the specialization at --t.
    Galois {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[command(flatten)]
        output: OutArgs,
    },
    /// Polynomial transforms.
    Construct {
        #[command(subcommand)]
        cmd: ConstructCmd,
        #[command(flatten)]
        output: OutArgs,
    },
    /// Exhaustive census over the box.
    Census(CensusArgs),
    /// Census plus kernel comparison; exits 1 if the count exceeds its theorem kernel.
    Verify(CensusArgs),
    /// Evaluate a bound kernel (implicit constant 1).
    Bound(BoundArgs),
    /// Combine shard reports.
    Merge {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[command(flatten)]
        output: OutArgs,
    },
    /// Rerun a report's embedded configuration and compare byte for byte.
    Replay { file: PathBuf },
}

fn run(cli: Cli) -> Result<(), CliError> {
    use commands::*;
    let threads = cli.threads;
    match cli.command {
        Command::Parse { poly, output } => parse(&poly, &output),
        Command::Height { poly, output } => height(&poly, &output),
        Command::Factor { poly, seed, output } => factor(&poly, seed, &output),
        Command::Galois { poly, t, output } => galois(&poly, t.as_deref(), &output),
        Command::Construct { cmd, output } => construct(&cmd, &output),
        Command::Census(args) => census(&args, threads, false),
        Command::Verify(args) => census(&args, threads, true),
        Command::Bound(args) => bound(&args),
        Command::Merge { files, output } => merge(&files, &output),
        Command::Replay { file } => replay(&file, threads),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
