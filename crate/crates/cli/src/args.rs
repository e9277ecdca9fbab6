use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "spectral",
    version,
    about = "Spectral actions of scalar-perturbed Dirac operators"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Evaluate sweeps on the current thread only.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Direct eigenvalue sum against the three-term expansion on odd spheres.
    SphereAction(SphereActionArgs),
    /// Check the shifted-basis expansion of the sphere multiplicities.
    LemmaVerify(LemmaArgs),
    /// Heat-kernel coefficient densities and their special cases.
    HeatKernel(HeatKernelArgs),
    /// Action coefficients of a torsion element over SU_q(2).
    Qsphere(QsphereArgs),
    /// Run every cross-validation check and write one summary document.
    Report,
}

#[derive(Debug, Args)]
pub struct SphereActionArgs {
    /// Odd dimensions, comma separated.
    #[arg(long)]
    pub dimension: String,
    /// Shifts t, comma separated.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub t: String,
    /// Scales Λ, comma separated.
    #[arg(long, default_value = "10", allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, default_value = "gaussian")]
    pub cutoff: String,
    #[arg(long, default_value_t = spectral_core::sphere_action::DEFAULT_TAIL_EPSILON)]
    pub tail_epsilon: f64,
    /// Hard limit on summed eigenvalue pairs.
    #[arg(long, env = "SPECTRAL_MAX_TERMS")]
    pub max_terms: Option<String>,
    /// Also fit the growth exponent of the remainder over the Λ list.
    #[arg(long)]
    pub probe_order: bool,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    /// Odd dimensions, comma separated.
    #[arg(long, default_value = "3,5,7,9,11")]
    pub dimension: String,
}

#[derive(Debug, Args)]
pub struct HeatKernelArgs {
    /// Impose the three-dimensional curvature identities and report the collapse.
    #[arg(long)]
    pub d3_check: bool,
    /// Bracket polynomials on the unit sphere of this dimension.
    #[arg(long)]
    pub sphere: Option<String>,
    /// Leading coefficients on a closed 3-manifold from integrated data.
    #[arg(long)]
    pub threefold: bool,
    /// Volume; a `pi^2` suffix means units of π².
    #[arg(long)]
    pub volume: Option<String>,
    /// Integrated scalar curvature; a `pi^2` suffix means units of π².
    #[arg(long = "totalR", alias = "total-r")]
    pub total_r: Option<String>,
    /// Dimension for explicit pointwise invariants.
    #[arg(long)]
    pub dimension: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub scalar_curvature: Option<String>,
    #[arg(long)]
    pub ric2: Option<String>,
    #[arg(long)]
    pub riem2: Option<String>,
    /// Field value φ (constant on the threefold).
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Option<String>,
    #[arg(long)]
    pub gradphi2: Option<String>,
}

#[derive(Debug, Args)]
pub struct QsphereArgs {
    /// Deformation parameter: a rational in (0, 1) or `symbolic`.
    #[arg(long, default_value = "1/2")]
    pub q: String,
    /// Torsion element as a JSON list of {alpha, beta, gamma, re, im}.
    #[arg(long)]
    pub torsion: PathBuf,
}
