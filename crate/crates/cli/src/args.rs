use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "jacobi-ellipse", version, about = "Jacobi polynomials on Bernstein ellipses")]
pub struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Number of theta samples for sampled extrema and asymptotic sweeps.
    #[arg(long, global = true, value_name = "N")]
    pub grid: Option<usize>,

    /// Reserved; every computation is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoeffMethodArg {
    Explicit,
    Recurrence,
    Transform,
    GegenbauerClosed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Max,
    Min,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChebKind {
    #[value(name = "T")]
    T,
    #[value(name = "U")]
    U,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct JacobiArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients d_k of P_n(z) = sum_k d_|k| u^k on the ellipse.
    Coeffs {
        #[command(flatten)]
        params: JacobiArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "explicit")]
        method: CoeffMethodArg,
    },
    /// Evaluates P_n on an ellipse by the coefficient series and directly.
    Eval {
        #[command(flatten)]
        params: JacobiArgs,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        rho: f64,
        /// Angles to evaluate at; defaults to a uniform grid of `--points` angles.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        theta: Vec<f64>,
        #[arg(long, default_value_t = 16)]
        points: usize,
    },
    /// Maximum or minimum of |P_n| over an ellipse, closed form and sampled.
    Extrema {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(long, allow_negative_numbers = true, requires = "beta", conflicts_with_all = ["lambda", "cheb"])]
        alpha: Option<f64>,
        #[arg(long, allow_negative_numbers = true, requires = "alpha")]
        beta: Option<f64>,
        /// Gegenbauer parameter of C_n^lambda.
        #[arg(long, allow_negative_numbers = true, conflicts_with = "cheb")]
        lambda: Option<f64>,
        /// Chebyshev polynomial of the first (T) or second (U) kind.
        #[arg(long, value_enum)]
        cheb: Option<ChebKind>,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        rho: f64,
        /// Also estimate, without certification, the radius below which the
        /// Gegenbauer minimum leaves the minor axis.
        #[arg(long, requires = "lambda")]
        estimate_critical: bool,
    },
    /// Critical radii rho_n* for n = 2, 4, ..., n_max.
    RhoStar {
        #[arg(long, default_value_t = 100)]
        n_max: u32,
    },
    /// First-order asymptotic error sweep over degrees.
    Asymptotic {
        #[command(flatten)]
        params: JacobiArgs,
        #[arg(long)]
        rho: f64,
        #[arg(long, value_delimiter = ',', default_value = "64,128,256,512")]
        n: Vec<u32>,
        #[arg(long, default_value_t = jacobi_ellipse::asymptotics::DEFAULT_C_N)]
        c_n: f64,
    },
    /// Lower bound for min |P_n| on an ellipse, with the sampled minimum.
    LowerBound {
        #[command(flatten)]
        params: JacobiArgs,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        rho: f64,
        #[arg(long, default_value_t = jacobi_ellipse::asymptotics::DEFAULT_C_N)]
        c_n: f64,
    },
    /// Data behind figures 1 to 4.
    Figure {
        /// Figure number, 1 to 4.
        id: u8,
        /// Override the radii of figures 1 to 3.
        #[arg(long, value_delimiter = ',')]
        rhos: Vec<f64>,
        /// Override the number of theta samples of figures 1 to 3.
        #[arg(long)]
        theta_samples: Option<usize>,
        /// Override the largest degree of figure 4.
        #[arg(long)]
        n_max: Option<u32>,
    },
    /// Error bound for interpolation in the zeros of P_n.
    InterpBound {
        #[command(flatten)]
        params: JacobiArgs,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        rho: f64,
        /// Maximum of |f| on the ellipse.
        #[arg(long = "m")]
        m: f64,
    },
}
