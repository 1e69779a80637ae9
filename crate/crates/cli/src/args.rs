use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "landau", version, about = "Coherent states for Euclidean and hyperbolic Landau levels")]
pub struct Cli {
    /// Optional JSON run configuration; flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Quadrature nodes for half-line integrals (at least 16).
    #[arg(long, global = true)]
    pub nodes: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy tables.
    #[command(subcommand)]
    Levels(LevelsCmd),
    /// Frame bounds of Hermite-window Gabor systems on square lattices.
    #[command(subcommand)]
    Gabor(GaborCmd),
    /// Hyperbolic transform checks.
    #[command(subcommand)]
    Hyper(HyperCmd),
    /// Modular group formulas, orbits, bounds and the orbit witness.
    #[command(subcommand)]
    Fuchsian(FuchsianCmd),
}

#[derive(Debug, Subcommand)]
pub enum LevelsCmd {
    /// `(n + 1/2) B` for `n = 0..=nmax`.
    Euclid {
        #[arg(long = "B")]
        b: f64,
        #[arg(long)]
        nmax: usize,
    },
    /// Hyperbolic bound-state energies.
    Hyper {
        #[arg(long = "B")]
        b: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum GaborCmd {
    Scan(ScanArgs),
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Landau level of the window.
    #[arg(long)]
    pub n: usize,
    /// `from:to:steps`.
    #[arg(long)]
    pub omega2: String,
    #[arg(long)]
    pub modes: Option<usize>,
    #[arg(long)]
    pub interior: Option<usize>,
    #[arg(long)]
    pub radius: Option<usize>,
    #[arg(long)]
    pub theta_frame: Option<f64>,
    #[arg(long)]
    pub theta_def: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum HyperCmd {
    /// Compare the coherent-state transform with its expansion in derivatives of one analytic function.
    Prop1(Prop1Args),
}

#[derive(Debug, Args)]
pub struct Prop1Args {
    #[arg(long = "B")]
    pub b: f64,
    #[arg(long)]
    pub n: usize,
    /// `default` or `x0:x1:nx,y0:y1:ny`.
    #[arg(long, default_value = "default", allow_hyphen_values = true)]
    pub grid: String,
    /// `reference` or `p,rate` for `t^p e^{-rate t}`.
    #[arg(long, default_value = "reference", allow_hyphen_values = true)]
    pub function: String,
    #[arg(long)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum FuchsianCmd {
    /// Area of a fundamental domain as a multiple of pi.
    Area {
        /// `g,r,e1,...,er` with `inf` for cusps.
        #[arg(long)]
        signature: String,
    },
    /// Dimension of holomorphic forms of weight `m`.
    Dim {
        #[arg(long)]
        signature: String,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
    /// Number of zeros of a weight-`m` form.
    Zeros {
        #[arg(long)]
        signature: String,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
    /// Orbit of a point (CSV `x,y,word`).
    Orbit {
        /// `modular` or `gamma:N`.
        #[arg(long, default_value = "modular")]
        group: String,
        /// `x,y`, `i` or `rho`.
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
        #[arg(long, default_value_t = 3)]
        words: usize,
    },
    /// Necessary conditions for completeness (JSON).
    Bounds {
        #[arg(long = "B")]
        b: f64,
        #[arg(long)]
        n: usize,
        /// Weight of a form vanishing at one point.
        #[arg(long, conflicts_with = "signature")]
        m0: Option<f64>,
        /// Covolume condition for this signature; the modular group if neither flag is given.
        #[arg(long)]
        signature: Option<String>,
    },
    /// Build and audit the orbit witness (JSON).
    Witness {
        #[arg(long = "B")]
        b: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        form: FormName,
        /// `x,y`, `i` or `rho`.
        #[arg(long, default_value = "rho", allow_hyphen_values = true)]
        zeta0: String,
        #[arg(long)]
        words: Option<usize>,
        #[arg(long, default_value_t = 40)]
        truncation: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormName {
    #[value(name = "E4")]
    E4,
    #[value(name = "E6")]
    E6,
    #[value(name = "Delta")]
    Delta,
}
