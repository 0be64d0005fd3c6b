use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "xi-harmonic", version, about = "Numerical verification of the harmonic continuation of ξ")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify one identity; without flags the acceptance configuration runs.
    #[command(subcommand)]
    Verify(Verify),
    /// Bracket the zeros of Ξ up to a height.
    Zeros(ZerosArgs),
    /// Scan the series continuation toward y = 0 at zeros and a reference height.
    RhScan(RhScanArgs),
    /// Boundary recovery of the Poisson extension (or of the series with --duffin).
    Boundary(BoundaryArgs),
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    Eq11(Eq11Args),
    Upsilon(UpsilonArgs),
    Dirichlet(DirichletArgs),
    LaplaceChain(LaplaceArgs),
    Rk(RkArgs),
    Duffin(DuffinArgs),
    Harmonicity(HarmonicityArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    Partial,
    Abel,
    Cesaro,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Plain,
    Twopi,
    Auto,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Relative tolerance the reports are judged against.
    #[arg(long)]
    pub rel_tol: Option<f64>,
    /// Absolute tolerance; defaults to the relative one.
    #[arg(long)]
    pub abs_tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output file (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SchemeArgs {
    #[arg(long, value_enum)]
    pub scheme: Option<SchemeArg>,
    #[arg(long)]
    pub m_max: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
}

#[derive(Debug, Args)]
pub struct Eq11Args {
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub x: Option<Vec<f64>>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct UpsilonArgs {
    /// s as re[,im]; repeatable.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Vec<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct DirichletArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub y: Option<Vec<f64>>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct LaplaceArgs {
    #[arg(long)]
    pub n: Option<usize>,
    /// s as re[,im]; repeatable.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Vec<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct RkArgs {
    #[arg(long, default_value_t = 6)]
    pub k_max: usize,
    #[arg(long, default_value_t = 500)]
    pub n_max: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct DuffinArgs {
    #[arg(long, value_delimiter = ',')]
    pub x: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    pub y: Option<Vec<f64>>,
    #[arg(long, value_enum, default_value_t = ConventionArg::Auto)]
    pub convention: ConventionArg,
    #[command(flatten)]
    pub scheme: SchemeArgs,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct HarmonicityArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub y: Option<Vec<f64>>,
    /// Finite-difference step.
    #[arg(long, default_value_t = 1e-2)]
    pub h: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    #[arg(long, default_value_t = 30.0)]
    pub max_height: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct RhScanArgs {
    /// Zeros table in the CSV format written by `zeros`.
    #[arg(long)]
    pub zeros_file: Option<PathBuf>,
    /// Height for find_zeros when no file is given.
    #[arg(long, default_value_t = 22.0)]
    pub max_height: f64,
    /// Non-zero reference height.
    #[arg(long, default_value_t = 10.0)]
    pub reference: f64,
    /// Emit plot-ready trajectories at these heights instead of reports.
    #[arg(long, value_delimiter = ',')]
    pub gamma: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    pub y: Option<Vec<f64>>,
    #[command(flatten)]
    pub scheme: SchemeArgs,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct BoundaryArgs {
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub x: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    pub y: Option<Vec<f64>>,
    /// Recover the boundary values from the Möbius series instead.
    #[arg(long)]
    pub duffin: bool,
    #[command(flatten)]
    pub scheme: SchemeArgs,
    #[command(flatten)]
    pub common: Common,
}
