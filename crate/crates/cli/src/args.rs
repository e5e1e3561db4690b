use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "apostol-kit",
    version,
    about = "Exact Apostol-type polynomials, Padé data and identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate polynomials or numbers.
    Gen(GenArgs),
    /// Emit the [n, m] Padé approximant to e^t.
    Pade(PadeArgs),
    /// Verify identities over a parameter grid.
    Verify(VerifyArgs),
    /// Time per-index against batched polynomial generation.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Bernoulli,
    Euler,
    Genocchi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyFilter {
    Bernoulli,
    Euler,
    Genocchi,
    All,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 1)]
    pub alpha: u32,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub lambda: String,
    /// Single index.
    #[arg(long, conflicts_with = "k_max", required_unless_present = "k_max")]
    pub k: Option<usize>,
    /// Every index from 0 through this bound.
    #[arg(long)]
    pub k_max: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Emit numbers (the polynomials evaluated at 0, or 2^k E_k(1/2) for Euler).
    #[arg(long)]
    pub numbers: bool,
}

#[derive(Debug, Args)]
pub struct PadeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    /// Include remainder coefficients gamma_0 through gamma_L.
    #[arg(long, value_name = "L")]
    pub gamma: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// theorem1, theorem1-low, theorem1-high, theorem2, corollary1, corollary2,
    /// remark-r1, theorem3, functional, lacunary, cj-table or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, value_enum, default_value = "all")]
    pub family: FamilyFilter,
    #[arg(long)]
    pub alpha_max: Option<u32>,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub m_max: Option<usize>,
    /// Absolute bound on p (on j for cj-table); per-suite defaults otherwise.
    #[arg(long)]
    pub p_max: Option<usize>,
    #[arg(long)]
    pub s_max: Option<usize>,
    /// Comma-separated exact scalars.
    #[arg(long, allow_hyphen_values = true)]
    pub lambdas: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub shifts: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub rhos: Option<String>,
    /// Print only pass/fail counts.
    #[arg(long)]
    pub summary: bool,
    /// Corrupt the cached polynomial sequences to exercise the failure path.
    #[arg(long, hide = true)]
    pub inject_error: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value = "bernoulli")]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 1)]
    pub alpha: u32,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, default_value_t = 64)]
    pub k_max: usize,
}
