//! `structinfo`: information estimations of graph structures from the command
//! line.

mod commands;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use structinfo::{EpsVariant, EstimatorOptions, H21Normalization, Reference};

#[derive(Debug, Parser)]
#[command(
    name = "structinfo",
    version,
    about = "Entropy-based information estimations of graph structures"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Reference vertex for remoteness and open contours. Defaults to the
    /// base node for marked graphs and the center otherwise.
    #[arg(long, global = true, value_enum)]
    pub reference: Option<ReferenceArg>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Absolute tolerance for treating two estimations as equal.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tolerance: f64,

    /// Eccentricity used in the remoteness weights.
    #[arg(long, global = true, value_enum, default_value_t = EpsArg::Center)]
    pub eps_variant: EpsArg,

    /// Normalization of vertex degrees inside contour rows.
    #[arg(long = "h21-normalization", global = true, value_enum, default_value_t = H21Arg::Row)]
    pub h21_normalization: H21Arg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Information estimation of each input graph.
    Estimate {
        #[arg(required = true)]
        paths: Vec<String>,
    },
    /// Order graphs by descending amplitude, then phase, then H1.
    Rank {
        #[arg(required = true)]
        paths: Vec<String>,
    },
    /// Marked estimation with the base node at every vertex.
    BnSweep { path: String },
    /// Nonisomorphic trees on N vertices.
    EnumerateTrees {
        n: usize,
        /// Estimate every tree and count distinct vectors.
        #[arg(long)]
        distinctness: bool,
    },
    /// Extremal bounds, gaps and Lagrange sensitivities for a graph.
    Bounds { path: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReferenceArg {
    Center,
    Bn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EpsArg {
    Center,
    PerVertex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum H21Arg {
    Row,
    Global,
}

/// Resolved settings for one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub reference: Option<Reference>,
    pub format: Format,
    pub tolerance: f64,
    pub options: EstimatorOptions,
}

impl RunConfig {
    fn from_args(args: &GlobalArgs) -> Result<Self, String> {
        if !(args.tolerance > 0.0 && args.tolerance.is_finite()) {
            return Err(format!("--tolerance must be positive, got {}", args.tolerance));
        }
        Ok(Self {
            reference: args.reference.map(|r| match r {
                ReferenceArg::Center => Reference::Center,
                ReferenceArg::Bn => Reference::BaseNode,
            }),
            format: args.format,
            tolerance: args.tolerance,
            options: EstimatorOptions {
                eps_variant: match args.eps_variant {
                    EpsArg::Center => EpsVariant::Center,
                    EpsArg::PerVertex => EpsVariant::PerVertex,
                },
                h21_normalization: match args.h21_normalization {
                    H21Arg::Row => H21Normalization::Row,
                    H21Arg::Global => H21Normalization::Global,
                },
            },
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match RunConfig::from_args(&cli.global) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(commands::EXIT_INPUT);
        }
    };
    let outcome = match &cli.command {
        Command::Estimate { paths } => commands::estimate(paths, &config),
        Command::Rank { paths } => commands::rank(paths, &config),
        Command::BnSweep { path } => commands::bn_sweep(path, &config),
        Command::EnumerateTrees { n, distinctness } => commands::enumerate_trees(*n, *distinctness, &config),
        Command::Bounds { path } => commands::bounds(path, &config),
    };
    print!("{}", outcome.stdout);
    for line in &outcome.stderr {
        eprintln!("{line}");
    }
    ExitCode::from(outcome.code)
}
