use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "fibhess",
    version,
    about = "Fibonacci-Hessenberg matrices, their determinants and Lorentz products"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a constructed matrix.
    Matrix {
        /// A, B, C, D, E, F, G, H, K, CD, EF, GH or J.
        family: String,
        #[arg(long)]
        n: usize,
        /// Replace column I (families C, D, E only).
        #[arg(long = "i")]
        column: Option<usize>,
        #[arg(long, default_value = "allones", requires = "column")]
        mode: Mode,
        #[arg(long, default_value = "pretty")]
        format: MatrixFormat,
    },
    /// Compute a determinant, symbolic in t unless --t is given.
    Det {
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long = "i")]
        column: Option<usize>,
        #[arg(long, default_value = "allones", requires = "column")]
        mode: Mode,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<i64>,
        #[arg(long, default_value = "cofactor")]
        engine: EngineChoice,
    },
    /// Lorentz product of two families, with the determinant law cross-check.
    LorentzMul {
        left: String,
        right: String,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<i64>,
    },
    /// Recompute one of the sequence tables and flag cells that disagree with print.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        #[arg(long)]
        n_max: i64,
        #[arg(long, default_value = "text")]
        format: DocFormat,
    },
    /// Audit the registered claims.
    Verify {
        /// Comma-separated claim ids; all claims when omitted.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
        #[arg(long, default_value_t = 12)]
        n_max: i64,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            default_value = "-3,-2,-1,0,1,2,3"
        )]
        t_samples: Vec<i64>,
        /// Exit with status 1 if any claim is a mismatch.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "text")]
        format: DocFormat,
    },
    /// Print the determinant sequence at a fixed t.
    Seq {
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        #[arg(long)]
        n_max: usize,
        /// Label the sequence against an OEIS stripped file.
        #[arg(long)]
        identify: bool,
        #[arg(long, env = "OEIS_STRIPPED_PATH")]
        oeis_file: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        min_match: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Mode {
    Allones,
    Basis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixFormat {
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DocFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    Hessenberg,
    Cofactor,
    Both,
}
