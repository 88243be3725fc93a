//! Flag definitions for all subcommands.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::Range;

#[derive(Debug, Parser)]
#[command(
    name = "dephaseprobe",
    version,
    about = "Quantum-probe metrology for Ohmic dephasing environments",
    after_help = "Ranges are written start:stop:count (inclusive, linear) or \
                  log:start:stop:count for log spacing. DEPHASEPROBE_THREADS \
                  caps worker parallelism (0 = auto). Exit codes: 0 success, \
                  1 invalid configuration, 2 numerical failure."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output path (stdout when omitted)
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dephasing exponent and its sensitivity to the spectral exponent
    Rate(RateArgs),
    /// Quantum Fisher information of the spectral exponent
    Qfi(QfiArgs),
    /// Projective-measurement Fisher information compared with the QFI
    Fisher(FisherArgs),
    /// Cartesian (s, tau) sweep of the QFI
    Sweep(SweepArgs),
    /// Optimal interaction time and the optimised QFI / QSNR
    Opt(OptArgs),
    /// Excess QFI at finite temperature
    Excess(ExcessArgs),
    /// Simulated estimation runs checked against the Cramér-Rao bound
    Simulate(SimulateArgs),
}

#[derive(Debug, Args)]
pub struct RateArgs {
    /// Spectral exponent
    #[arg(long)]
    pub s: Option<f64>,
    /// Spectral-exponent range
    #[arg(long = "s-range")]
    pub s_range: Option<Range>,
    /// Interaction time
    #[arg(long)]
    pub tau: Option<f64>,
    /// Interaction-time range
    #[arg(long = "tau-range")]
    pub tau_range: Option<Range>,
    /// Bath temperature
    #[arg(long = "T", default_value_t = 0.0)]
    pub temperature: f64,
    /// Rate model: auto, zero-t, exact, low-t, low-t-quadratic, high-t
    #[arg(long, default_value = "auto")]
    pub model: String,
}

#[derive(Debug, Args)]
pub struct QfiArgs {
    /// Spectral exponent
    #[arg(long)]
    pub s: Option<f64>,
    /// Spectral-exponent range
    #[arg(long = "s-range")]
    pub s_range: Option<Range>,
    /// Interaction time
    #[arg(long)]
    pub tau: Option<f64>,
    /// Interaction-time range
    #[arg(long = "tau-range")]
    pub tau_range: Option<Range>,
    /// Bath temperature (0 uses the zero-temperature closed form)
    #[arg(long = "T", default_value_t = 0.0)]
    pub temperature: f64,
}

#[derive(Debug, Args)]
pub struct FisherArgs {
    /// Spectral exponent
    #[arg(long)]
    pub s: Option<f64>,
    /// Spectral-exponent range
    #[arg(long = "s-range")]
    pub s_range: Option<Range>,
    /// Interaction time
    #[arg(long)]
    pub tau: Option<f64>,
    /// Interaction-time range
    #[arg(long = "tau-range")]
    pub tau_range: Option<Range>,
    /// x-component of the measurement axis
    #[arg(long, default_value_t = 1.0)]
    pub b1: f64,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Spectral-exponent range
    #[arg(long = "s-range")]
    pub s_range: Range,
    /// Interaction-time range
    #[arg(long = "tau-range")]
    pub tau_range: Range,
    /// Bath temperature
    #[arg(long = "T", default_value_t = 0.0)]
    pub temperature: f64,
}

#[derive(Debug, Args)]
pub struct OptArgs {
    /// Spectral exponent
    #[arg(long)]
    pub s: Option<f64>,
    /// Spectral-exponent range
    #[arg(long = "s-range")]
    pub s_range: Option<Range>,
    /// Search horizon for the interaction time
    #[arg(long = "tau-max", default_value_t = 35.0)]
    pub tau_max: f64,
}

#[derive(Debug, Args)]
pub struct ExcessArgs {
    /// Spectral exponent
    #[arg(long)]
    pub s: Option<f64>,
    /// Spectral-exponent range
    #[arg(long = "s-range")]
    pub s_range: Option<Range>,
    /// Interaction time
    #[arg(long)]
    pub tau: Option<f64>,
    /// Interaction-time range
    #[arg(long = "tau-range")]
    pub tau_range: Option<Range>,
    /// Bath temperature (must be positive)
    #[arg(long = "T")]
    pub temperature: f64,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// True spectral exponent of the simulated bath
    #[arg(long)]
    pub s: f64,
    /// Interaction time (defaults to the optimal time at this s)
    #[arg(long)]
    pub tau: Option<f64>,
    /// Search horizon used when tau is derived from the optimum
    #[arg(long = "tau-max", default_value_t = 35.0)]
    pub tau_max: f64,
    /// Measurements per trial
    #[arg(long = "M", default_value_t = 10_000)]
    pub shots: u64,
    /// Number of independent trials
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    /// x-component of the measurement axis
    #[arg(long, default_value_t = 1.0)]
    pub b1: f64,
    /// Master seed
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Lower edge of the estimator search interval
    #[arg(long = "s-lo", default_value_t = 0.1)]
    pub s_lo: f64,
    /// Upper edge of the estimator search interval
    #[arg(long = "s-hi", default_value_t = 3.0)]
    pub s_hi: f64,
}
