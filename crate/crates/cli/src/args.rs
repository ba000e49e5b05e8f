use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "spinlrl", version, about = "Exact verification of the spin-extended so(d+1,1) operator identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a suite of identities and report residuals.
    Verify(VerifyArgs),
    /// Reduce an expression to its normal form.
    Reduce(ReduceArgs),
    /// Print gamma and spin matrices in the fixture format.
    Matrices(MatricesArgs),
    /// Compare two expressions on random test functions.
    Oracle(OracleArgs),
    /// List the registered identities.
    List(ListArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Markdown,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Text => "txt",
            Format::Json => "json",
            Format::Markdown => "md",
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct OracleOpts {
    /// Random test functions per comparison.
    #[arg(long, default_value_t = 20)]
    pub trials: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest total x-degree of a test function.
    #[arg(long, default_value_t = 4)]
    pub max_degree: u32,
    /// Most negative power of r^2 in a test function.
    #[arg(long, default_value_t = -2, allow_negative_numbers = true)]
    pub min_k: i32,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Dimension or inclusive range, e.g. `3` or `2..4`.
    #[arg(long, default_value = "3")]
    pub d: String,
    /// core, sturm, schrodinger, appendix, d3 or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Report file; defaults to stdout, or to `$SPINLRL_OUT_DIR` when set.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Treat transcription-tier mismatches as failures.
    #[arg(long)]
    pub strict: bool,
    /// Omit timing fields so reports are byte-reproducible.
    #[arg(long)]
    pub no_timing: bool,
    /// Allow d = 7 and 8.
    #[arg(long)]
    pub large_d: bool,
    /// Also confirm every instance with the test-function oracle.
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    pub oracle_opts: OracleOpts,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long, default_value_t = 3)]
    pub d: usize,
    /// Print the adjoint of the normal form.
    #[arg(long)]
    pub adjoint: bool,
    /// Parameter values, e.g. `alpha=1,E=-1/2`.
    #[arg(long)]
    pub sub: Option<String>,
    pub expr: String,
}

#[derive(Debug, Args)]
pub struct MatricesArgs {
    #[arg(long, default_value_t = 3)]
    pub d: usize,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 3)]
    pub d: usize,
    #[command(flatten)]
    pub opts: OracleOpts,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Args)]
pub struct ListArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
