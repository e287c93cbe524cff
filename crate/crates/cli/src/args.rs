use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "cayht",
    version,
    about = "Exact hitting times, effective resistances and Kirchhoff indices on circulant Cayley graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Average hitting times h(start, target).
    Hit(HitArgs),
    /// Run verification checks over parameter grids.
    Verify(VerifyArgs),
    /// Kirchhoff index of a graph.
    Kirchhoff(KirchhoffArgs),
    /// Monte Carlo estimate of one hitting time.
    Simulate(SimulateArgs),
    /// Dump a structured matrix or one of its inverses.
    Inverse(InverseArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Cay(Z_2n, {±1}) with alternating weights p, q.
    Pm1,
    /// Directed Cay(Z_N, {+1, +2}) with weights p, q.
    Plus12,
    /// Unweighted Cay(Z_N, {±1, ±2}).
    Pm1pm2,
    /// Unweighted directed Cay(Z_N, {+1, +2}).
    Plus12base,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HitMethod {
    Formula,
    Solve,
    Oracle,
    Simulate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KfMethod {
    Formula,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixFormat {
    Json,
    Csv,
}

/// Family, size and weights shared by most subcommands.
#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Half the vertex count (pm1 only).
    #[arg(long = "n")]
    pub half: Option<usize>,
    /// Vertex count (plus12, pm1pm2, plus12base).
    #[arg(long = "N")]
    pub order: Option<usize>,
    /// Weight p as "a/b" or an integer.
    #[arg(long)]
    pub p: Option<String>,
    /// Weight q; defaults to 1 - p.
    #[arg(long)]
    pub q: Option<String>,
}

#[derive(Debug, Args)]
pub struct HitArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, default_value_t = 0)]
    pub start: usize,
    #[arg(
        long,
        conflicts_with = "all_targets",
        required_unless_present = "all_targets"
    )]
    pub target: Option<usize>,
    #[arg(long)]
    pub all_targets: bool,
    #[arg(long, value_enum, default_value_t = HitMethod::Oracle)]
    pub method: HitMethod,
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Check name; `residual` picks its family from --family.
    #[arg(long, required_unless_present = "all")]
    pub check: Option<String>,
    /// Size range "a..b" (inclusive) or a single value.
    #[arg(long = "n")]
    pub half: Option<String>,
    #[arg(long = "N")]
    pub order: Option<String>,
    /// Comma-separated weights, e.g. "1/2,1/3".
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Run every check over its default grid.
    #[arg(long, conflicts_with = "check")]
    pub all: bool,
    /// Also write the JSON report to this path.
    #[arg(long)]
    pub report: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = VerifyFormat::Json)]
    pub format: VerifyFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyFormat {
    Json,
}

#[derive(Debug, Args)]
pub struct KirchhoffArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_enum, default_value_t = KfMethod::Oracle)]
    pub method: KfMethod,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, default_value_t = 0)]
    pub start: usize,
    #[arg(long)]
    pub target: usize,
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Abort a trial after this many steps.
    #[arg(long)]
    pub step_cap: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct InverseArgs {
    /// One of: h-pm1, u2n, r2n, r2n-inv, h2n-inv, h-plus12, pn, ln, ln-inv,
    /// un, un-inv, hn-inv.
    #[arg(long)]
    pub matrix: String,
    #[arg(long = "n")]
    pub half: Option<usize>,
    #[arg(long = "N")]
    pub order: Option<usize>,
    #[arg(long)]
    pub p: Option<String>,
    /// Output the inverse of the named matrix computed by elimination.
    #[arg(long)]
    pub numeric_inverse: bool,
    #[arg(long, value_enum, default_value_t = MatrixFormat::Json)]
    pub format: MatrixFormat,
}
