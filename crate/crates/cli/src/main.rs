//! `padic-invariant`: regenerate and verify invariant sums from the command line.
//!
//! Exit codes: 0 success, 2 usage error, 3 singular point (x = 1/4),
//! 4 verification failure, 5 internal inconsistency.

mod commands;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use padic_invariant::Error;

#[derive(Parser, Debug)]
#[command(
    name = "padic-invariant",
    version,
    about = "Exact p-adic invariant sums with central binomial coefficients"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print U_1..U_k and A_0..A_{k-1} with a comparison against the printed tables.
    Polys {
        /// Largest k to generate (practical ceiling about 12).
        #[arg(long)]
        k: usize,
    },
    /// Check the finite identity symbolically for N = 1..=N_max, and numerically at x if given.
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long = "N")]
        n_max: u64,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Convergence-set verdict and valuation trace of the invariant series.
    Series {
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        p: u64,
        #[arg(long = "N")]
        n_max: u64,
    },
    /// Bernoulli numbers, polynomials, relations and Volkenborn sums.
    Bernoulli {
        #[command(subcommand)]
        command: BernoulliCommand,
    },
    /// Run the full verification suite.
    Selfcheck {
        /// Same as --format json.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum BernoulliCommand {
    /// B_0..B_n.
    Numbers {
        #[arg(long)]
        n: usize,
    },
    /// The Bernoulli polynomial B_n(x).
    Poly {
        #[arg(long)]
        n: usize,
    },
    /// The number relation for k, with an optional partial-sum valuation trace.
    Relation {
        #[arg(long)]
        k: usize,
        #[arg(long, requires = "n_max")]
        p: Option<u64>,
        #[arg(long = "N", requires = "p")]
        n_max: Option<u64>,
    },
    /// The polynomial relation for k.
    PolyRelation {
        #[arg(long)]
        k: usize,
    },
    /// Level sums p^-m sum_{j<p^m} j^n against B_n for levels 1..=m.
    Volkenborn {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u32,
    },
}

/// Everything that can end a run with a nonzero status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Lib(Error),
    /// Verification ran to completion and found failures; output is still printed.
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification(_) => 4,
            Failure::Lib(e) => match e {
                Error::SingularPoint => 3,
                Error::NonExactDivision | Error::DivisionByZeroPolynomial | Error::Inconsistent(_) => 5,
                Error::NotPrime(_) | Error::BinomialOutOfRange { .. } | Error::Parse(_) | Error::InvalidArgument(_) => {
                    2
                }
            },
        }
    }

    fn line(&self) -> String {
        match self {
            Failure::Usage(m) => format!("error: USAGE: {m}"),
            Failure::Verification(m) => format!("error: VERIFICATION_FAILED: {m}"),
            Failure::Lib(e) => format!("error: {}: {e}", e.code()),
        }
    }
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Usage(format!("cannot write to stdout: {e}")))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, failure) = match commands::run(&cli) {
        Ok(out) => (Some(out.text), out.failure),
        Err(f) => (None, Some(f)),
    };
    if let Some(text) = text {
        if let Err(f) = emit(&cli.output, &text) {
            eprintln!("{}", f.line());
            return ExitCode::from(f.exit_code());
        }
    }
    match failure {
        None => ExitCode::SUCCESS,
        Some(f) => {
            eprintln!("{}", f.line());
            ExitCode::from(f.exit_code())
        }
    }
}
