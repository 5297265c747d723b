//! `ellnorm` — inequality fuzz campaigns, steepest-direction oracle checks,
//! optimization runs with CSV traces, and plot-data emission.
//!
//! Exit codes: 0 success, 1 property violation / non-convergence, 2 usage
//! error, 3 internal numerical failure.

mod commands;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NUMERICAL: u8 = 3;

#[derive(Parser)]
#[command(name = "ellnorm", version, about = "Ellipsoid-norm optimization toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fuzz an inequality family and report violations.
    Ineq {
        /// Which inequality to check.
        #[arg(long, value_enum)]
        name: IneqName,
        /// Number of random trials.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Master seed for the deterministic fuzz campaign.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Vector/matrix dimension.
        #[arg(long, default_value_t = 8)]
        dim: usize,
        /// Write output to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the closed-form steepest direction against the sampling oracle.
    Direction {
        /// Problem dimension (1..=6; oracle tolerance is calibrated up to 6).
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Oracle samples per trial (at least 1000).
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        /// Master seed.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of random (B, g) trials.
        #[arg(long, default_value_t = 20)]
        trials: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimize a built-in objective and emit the convergence trace.
    Optimize {
        /// Objective function.
        #[arg(long, value_enum)]
        function: FunctionName,
        /// Search method: quasi-Newton or steepest descent.
        #[arg(long, value_enum)]
        method: MethodName,
        /// Starting point as comma-separated reals, e.g. "-1.2,1".
        #[arg(long, allow_hyphen_values = true)]
        x0: String,
        /// Gradient-norm stopping tolerance.
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,
        /// Iteration cap.
        #[arg(long, default_value_t = 500)]
        max_iter: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit TSV samples of x−1 and ln(x) over a uniform grid.
    PlotLemma1 {
        #[arg(long, default_value_t = 0.01)]
        xmin: f64,
        #[arg(long, default_value_t = 4.0)]
        xmax: f64,
        #[arg(long, default_value_t = 400)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IneqName {
    #[value(name = "log_bound", alias = "log-bound")]
    LogBound,
    #[value(name = "am_gm", alias = "am-gm")]
    AmGm,
    Young,
    Holder,
    #[value(name = "cauchy_schwarz", alias = "cauchy-schwarz")]
    CauchySchwarz,
    #[value(name = "transpose_spectral", alias = "transpose-spectral")]
    TransposeSpectral,
    #[value(name = "generalized_cs", alias = "generalized-cs")]
    GeneralizedCs,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctionName {
    Rosenbrock,
    Sphere,
    Quadratic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodName {
    Qn,
    Sd,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Ineq { name, trials, seed, dim, out } => {
            commands::ineq::run(name, trials, seed, dim, out.as_deref())
        }
        Command::Direction { dim, samples, seed, trials, out } => {
            commands::direction::run(dim, samples, seed, trials, out.as_deref())
        }
        Command::Optimize { function, method, x0, tolerance, max_iter, out } => {
            commands::optimize::run(function, method, &x0, tolerance, max_iter, out.as_deref())
        }
        Command::PlotLemma1 { xmin, xmax, points, out } => {
            commands::plot::run(xmin, xmax, points, out.as_deref())
        }
    };
    match code {
        Ok(c) => ExitCode::from(c),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_NUMERICAL)
        }
    }
}
