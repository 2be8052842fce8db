use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use motivic_core::{CyclicDimensionVector, Partition};

#[derive(Debug, Parser)]
#[command(name = "motivic", version, about = "Motivic classes of commuting varieties and their point counts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a generating series up to a total degree.
    Series(SeriesArgs),
    /// Print the class of a commuting variety as a polynomial in L.
    Class(ClassArgs),
    /// Compare classes or identities against independent computations.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    FeitFine,
    Jordan,
    Euler,
    Cyclic,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub theorem: Theorem,
    /// Total degree of the truncation.
    #[arg(long)]
    pub order: u32,
    /// Negative powers of L kept; defaults to MOTIVIC_DEPTH, else the minimum for the order.
    #[arg(long, env = "MOTIVIC_DEPTH")]
    pub depth: Option<u32>,
    /// Number of summands, cyclic only.
    #[arg(long)]
    pub r: Option<usize>,
    /// Include the O(L^k) tail of every coefficient.
    #[arg(long)]
    pub windows: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("kind").required(true).args(["cn", "calpha", "dims"])))]
pub struct ClassArgs {
    /// `[C(n)]`.
    #[arg(long)]
    pub cn: Option<u32>,
    /// `[C(alpha)]` for a partition such as `2,1`.
    #[arg(long)]
    pub calpha: Option<Partition>,
    /// Cyclic dimension vector such as `1,1`.
    #[arg(long)]
    pub dims: Option<CyclicDimensionVector>,
    #[arg(long, env = "MOTIVIC_DEPTH")]
    pub depth: Option<u32>,
    /// Largest accepted `n`.
    #[arg(long, default_value_t = 6)]
    pub max_size: u32,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
#[command(group(
    ArgGroup::new("target").required(true).args(["commuting", "jordan", "cyclic", "axioms", "identities"])
))]
pub struct VerifyArgs {
    /// `[C(n)]` against commuting pair counts.
    #[arg(long, requires = "n")]
    pub commuting: bool,
    /// `[C(alpha)]` for every `alpha` of `n` against counts by Jordan type.
    #[arg(long, requires = "n")]
    pub jordan: bool,
    /// Cyclic classes against cyclic pair counts.
    #[arg(long, requires = "dims")]
    pub cyclic: bool,
    /// The exponentiation properties on random instances.
    #[arg(long)]
    pub axioms: bool,
    /// Series identities between independent constructions.
    #[arg(long)]
    pub identities: bool,

    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub dims: Option<CyclicDimensionVector>,
    /// Primes at which to count.
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub q: Vec<u32>,
    #[arg(long, default_value_t = 20)]
    pub trials: u32,
    /// Truncation for axioms and identities; defaults to 6 and 8.
    #[arg(long)]
    pub order: Option<u32>,
    /// Variables of the random series.
    #[arg(long, default_value_t = 2)]
    pub vars: usize,
    #[arg(long, env = "MOTIVIC_DEPTH")]
    pub depth: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Oracle worker threads; results do not depend on it.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Most matrices a single count may enumerate.
    #[arg(long, default_value_t = motivic_core::ff_oracle::DEFAULT_BUDGET)]
    pub budget: u128,
    #[arg(long)]
    pub json: bool,
    /// Report every check as taking 0 ms, for reproducible output.
    #[arg(long)]
    pub no_timing: bool,
}
