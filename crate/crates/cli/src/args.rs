use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "kasner",
    version,
    about = "m-Kasner polygon descent and its area-ratio bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Descendant sequence K, K′, …, K^t with areas.
    Descend(DescendArgs),
    /// Area ratio report for one polygon or parameter file.
    Ratio(RatioArgs),
    /// Theoretical interval for the ratio of n-gons.
    Bounds(BoundsArgs),
    /// Pentagon recurrence coefficients, and its residual on a polygon.
    Recurrence(RecurrenceArgs),
    /// Pentagon extremal family at one parameter value.
    PentagonFamily(FamilyArgs),
    /// Hexagon extremal family at one parameter value.
    HexagonFamily(FamilyArgs),
    /// Any extremal family selected by name.
    Extremal(ExtremalArgs),
    /// n-gon with ratio close to 1 − 2r.
    ConstructLower(ConstructArgs),
    /// n-gon with ratio close to 1.
    ConstructUpper(ConstructArgs),
    /// Random convex polygons as JSON lines.
    Sample(SampleArgs),
    /// Randomized verification suites; exit code 3 if any check fails.
    Verify(VerifyArgs),
    /// Empirical min or max of the ratio over convex n-gons.
    Extremize(ExtremizeArgs),
    /// SVG overlay of K, K′, …, K^t.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write here instead of stdout (atomically).
    #[arg(long = "out")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DescendArgs {
    /// Polygon file, `.json` or `.csv`.
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub m: f64,
    #[arg(long, default_value_t = 1)]
    pub t: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct RatioSource {
    /// Polygon file, `.json` or `.csv`.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Parameter file `{"pentagon": {...}}` or `{"hexagon": {...}}`.
    #[arg(long)]
    pub params: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RatioArgs {
    #[command(flatten)]
    pub source: RatioSource,
    #[arg(long)]
    pub m: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: f64,
}

#[derive(Debug, Args)]
pub struct RecurrenceArgs {
    #[arg(long)]
    pub m: f64,
    /// Pentagon to evaluate the residual on.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub kind: Side,
    /// Family parameter (n for the lower families, n or t for the upper).
    #[arg(long)]
    pub param: f64,
    #[arg(long, default_value_t = 0.5)]
    pub m: f64,
    /// Also write the polygon as JSON here.
    #[arg(long)]
    pub polygon: Option<PathBuf>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    PentagonLower,
    PentagonUpper,
    HexagonLower,
    HexagonUpper,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    #[arg(long, value_enum)]
    pub kind: FamilyKind,
    #[arg(long)]
    pub param: f64,
    #[arg(long, default_value_t = 0.5)]
    pub m: f64,
    #[arg(long)]
    pub polygon: Option<PathBuf>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub eps: f64,
    /// Print the ratio report for this m to stderr.
    #[arg(long)]
    pub m: Option<f64>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
    #[arg(long, default_value_t = 1.0)]
    pub anisotropy: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// `start:stop:count`; endpoints 0 and 1 are skipped.
    #[arg(long = "m-grid", default_value = "0.1:0.9:9")]
    pub m_grid: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Min,
    Max,
}

#[derive(Debug, Args)]
pub struct ExtremizeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub m: f64,
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    /// Number of restarts.
    #[arg(long, default_value_t = 200)]
    pub budget: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub m: f64,
    #[arg(long, default_value_t = 5)]
    pub t: usize,
    #[arg(long)]
    pub out: PathBuf,
}
