use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "sl3res", version, about = "Gröbner bases and the minimal resolution for the Kostant form of U(sl3+)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Flags shared by every subcommand.
#[derive(Clone, Debug, Args)]
pub struct Common {
    /// The characteristic (a prime).
    #[arg(long)]
    pub p: u32,
    /// One past the largest generator index.
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// The smallest generator index.
    #[arg(long, default_value_t = 0)]
    pub j: u32,
    /// Write the JSON report here (`-` for stdout, replacing the text report).
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of an expression under G_m (a/b letters) or the
    /// straightening system (ea/eab/eb letters).
    Nf {
        #[command(flatten)]
        common: Common,
        /// For divided letters: the largest divided power (default p^m − 1).
        #[arg(long)]
        bound: Option<u32>,
        /// The expression, e.g. "b0*a0*b0*a0" or "eb(1)*ea(1)".
        expr: String,
    },
    /// List a Gröbner basis with its completeness certificate.
    Gb {
        #[command(flatten)]
        common: Common,
        /// Use the straightening rules on divided powers instead of G_m.
        #[arg(long)]
        big: bool,
        /// With --big: the largest divided power; pairs are certified up to this Deg.
        #[arg(long, requires = "big")]
        bound: Option<u32>,
        /// Re-certify a basis previously written by `gb --json`.
        #[arg(long, value_name = "PATH", conflicts_with_all = ["big", "bound"])]
        rules: Option<PathBuf>,
    },
    /// Relation suite, dimension count and coefficient lemmas.
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Anick chains, differentials and exactness certificates.
    Anick {
        #[command(flatten)]
        common: Common,
        /// Degree bound for matrices and checks (default 3p²).
        #[arg(long)]
        max_deg: Option<u32>,
    },
    /// The minimal-resolution surgery with smallness, exactness and Ext dimensions.
    Minimal {
        #[command(flatten)]
        common: Common,
        /// Degree bound for matrices and checks (default 3p²).
        #[arg(long)]
        max_deg: Option<u32>,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Nf { common, .. }
            | Command::Gb { common, .. }
            | Command::Verify { common }
            | Command::Anick { common, .. }
            | Command::Minimal { common, .. } => common,
        }
    }
}
