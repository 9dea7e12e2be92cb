//! Command-line front end.
//!
//! Exit codes: 0 pass, 1 a claim or identity is false, 2 usage or
//! validation error, 3 resource cap exceeded.

mod commands;
mod output;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::congruence::DEFAULT_MAX_TRUNCATION;

pub use output::Format;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "regulus", version, about = "Truncated q-series and partition congruence checks")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads for claim scans; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Largest coefficient index any command may compute.
    #[arg(
        long,
        global = true,
        env = "REGULUS_MAX_TRUNCATION",
        default_value_t = DEFAULT_MAX_TRUNCATION,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    pub max_truncation: u64,
    /// Largest accepted --count.
    #[arg(long, global = true, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_count: u64,
    /// Report wall-clock time in `timing_ms`; otherwise it is 0.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the coefficients of a series.
    Expand {
        /// psi, f, euler, jacobi-cube, theta:<±r>:<±s>, p, b<l>, bd<p>, or an
        /// eta quotient such as "5^1,1^-1".
        #[arg(long)]
        spec: String,
        /// Truncation: coefficients 0..=N.
        #[arg(long, default_value_t = 20)]
        n: u64,
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Check a classical identity or dissection to a truncation.
    VerifyIdentity {
        /// euler-product, jacobi-cube, jtp:<t>:<±1>, quintuple:<u>:<v>,
        /// ramanujan5, psi-dissect:<p>, f-dissect:<p>, bp-prime:<p>.
        #[arg(long)]
        id: String,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Instantiate a catalog entry and scan every claim.
    VerifyFamily(FamilyArgs),
    /// Residue classes carried by the psi or f(-q) dissection.
    Support {
        #[arg(long, value_enum)]
        function: ThetaArg,
        #[arg(long)]
        p: u64,
    },
    /// Look for progressions on which a function vanishes.
    Search {
        #[arg(long)]
        function: String,
        #[arg(long = "mod")]
        modulus: u64,
        #[arg(long)]
        a_max: u64,
        /// Offsets scanned are below min(b-max, A); defaults to a-max.
        #[arg(long)]
        b_max: Option<u64>,
        #[arg(long, default_value_t = 500)]
        count: u64,
    },
    /// Describe catalog entries.
    Catalog {
        #[arg(long)]
        id: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ThetaArg {
    Psi,
    F,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub id: String,
    #[arg(long)]
    pub p: Option<u64>,
    /// A single value or an inclusive range `lo..hi`.
    #[arg(long)]
    pub alpha: Option<Range>,
    /// The residue index `i`, `j` or `r`.
    #[arg(long, visible_aliases = ["i", "j", "r"])]
    pub index: Option<u64>,
    /// Comma-separated primes for the multi-prime entries.
    #[arg(long, value_delimiter = ',')]
    pub primes: Vec<u64>,
    #[arg(long)]
    pub k: Option<Range>,
    /// Member number within a multi-member entry.
    #[arg(long)]
    pub family: Option<u32>,
    #[arg(long, default_value_t = 200)]
    pub count: u64,
}

/// Inclusive range of small parameters: `3`, `0..2` or `0..=2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub lo: u64,
    pub hi: u64,
}

impl Range {
    pub fn values(self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("bad range {s:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        if hi - lo > 64 {
            return Err(format!("range {s:?} spans more than 64 values"));
        }
        Ok(Range { lo, hi })
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

/// A failed command and the exit code it maps to.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Cap(String),
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Cap(_) => EXIT_CAP,
            Failure::Internal(_) => EXIT_FALSE,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "error: {m}"),
            Failure::Cap(m) => write!(f, "resource cap exceeded: {m}"),
            Failure::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

/// Runs with the process arguments, writing to stdout and stderr.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs with explicit arguments and sinks; returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let start = std::time::Instant::now();
    match commands::execute(&cli) {
        Ok(mut report) => {
            if cli.config.timing {
                report.timing_ms = start.elapsed().as_millis() as u64;
            }
            if let Err(e) = output::write(&report, cli.config.format, out) {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            if report.passed {
                EXIT_PASS
            } else {
                EXIT_FALSE
            }
        }
        Err(failure) => {
            let _ = writeln!(err, "{failure}");
            failure.code()
        }
    }
}
