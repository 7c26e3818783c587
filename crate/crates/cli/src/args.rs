use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "walls", version, about = "Exact counts of Young tableaux with walls and tree-child networks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Emit a table of exact values
    Table,
    /// Run a named identity check, or `all`
    Verify,
    /// Emit the coefficients of D_k(t)
    Series,
    /// Count one instance by brute force and compare with the fast path
    Oracle,
    /// Compare a slice against an OEIS b-file
    Crosscheck,
    /// Compare the large-n expansion of TC(n,k) with the exact count
    Asym,
}

#[derive(Debug, Clone, Args)]
pub struct Opts {
    #[arg(long, global = true, value_enum)]
    pub seq: Option<Seq>,

    #[arg(long, global = true)]
    pub nmax: Option<usize>,

    #[arg(long, global = true)]
    pub kmax: Option<usize>,

    #[arg(long, global = true)]
    pub n: Option<usize>,

    #[arg(long, global = true)]
    pub k: Option<usize>,

    #[arg(long, global = true)]
    pub m: Option<usize>,

    /// Which D_k to expand
    #[arg(long, global = true)]
    pub dk: Option<usize>,

    /// Truncation order: coefficients of t^0 through t^order
    #[arg(long, global = true)]
    pub order: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Method::Recurrence)]
    pub method: Method,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Directory for cached tables; WALLS_CACHE_DIR takes precedence
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    #[arg(long, global = true)]
    pub oeis: Option<String>,

    #[arg(long, global = true, value_enum)]
    pub map: Option<SliceName>,

    /// Use the bundled b-files instead of fetching
    #[arg(long, global = true)]
    pub offline: bool,

    /// Read the b-file from this path instead of fetching
    #[arg(long, global = true)]
    pub bfile: Option<PathBuf>,

    /// Name of the check to run
    #[arg(long, global = true)]
    pub check: Option<String>,

    /// Keep only the diagonal k = n (k = n - 1 for tc)
    #[arg(long, global = true)]
    pub diagonal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Seq {
    A,
    B,
    B3,
    Omega,
    Tc,
    F,
    Ftilde,
    U,
}

impl Seq {
    pub fn name(self) -> &'static str {
        match self {
            Seq::A => "a",
            Seq::B => "b",
            Seq::B3 => "b3",
            Seq::Omega => "omega",
            Seq::Tc => "tc",
            Seq::F => "f",
            Seq::Ftilde => "ftilde",
            Seq::U => "u",
        }
    }

    pub fn is_three_dimensional(self) -> bool {
        matches!(self, Seq::B3 | Seq::Omega)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recurrence,
    Closed,
    Kernel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Bfile,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SliceName {
    #[value(name = "b-k0")]
    BK0,
    #[value(name = "a-diag")]
    ADiag,
    #[value(name = "a-k1")]
    AK1,
    #[value(name = "b-k1")]
    BK1,
}
