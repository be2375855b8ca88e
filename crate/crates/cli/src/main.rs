//! `probgen`: command-line access to the group catalog and the generation
//! computations.

mod commands;
mod output;
mod report;
mod spread_plan;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use probgen::catalog::Catalog;
use probgen::Error;

const CATALOG_ENV: &str = "PROBGEN_CATALOG";

/// Probabilistic generation and spread computations for groups of the
/// catalog.
///
/// Class labels are the ones printed by `probgen classes GROUP`: element
/// order followed by letters, numbered within each order by increasing
/// class size. They need not agree with the letters of printed tables.
#[derive(Parser, Debug)]
#[command(name = "probgen", version)]
struct Cli {
    /// Catalog file to use instead of the bundled one (default: $PROBGEN_CATALOG).
    #[arg(long, global = true, value_name = "FILE")]
    catalog: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the conjugacy classes: label, element order, size, centralizer order.
    Classes { group: String },

    /// sigma(G, s) and the vector of values sigma(g, s) over all classes g.
    Sigma {
        group: String,
        #[arg(long)]
        s: String,
        /// Restrict g to prime order classes outside the named socle.
        #[arg(long, value_name = "SOCLE")]
        outer: Option<String>,
    },

    /// sigma of the group, the spread bound, the best classes and their
    /// maximal subgroup counts.
    Info { group: String },

    /// The exact proportion P(g, s) of conjugates of g not generating with s.
    Nongen {
        group: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        s: String,
    },

    /// Randomized check that the class of s has uniform spread k.
    Spread {
        group: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 50)]
        tries: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Comma-separated candidate classes for the tuple entries
        /// (default: prime order classes with nonzero sigma value).
        #[arg(long, value_delimiter = ',')]
        classes: Option<Vec<String>>,
    },

    /// Run a fixed suite of computations and print the results.
    Report {
        #[arg(long, value_enum, default_value_t = Suite::PaperSmall)]
        suite: Suite,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Add the running time of each row.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    PaperSmall,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

/// Result of a command that ran to completion: text to print and whether
/// the computed answer was positive.
pub struct Outcome {
    text: String,
    success: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, success: true }
    }
}

fn exit_code(error: &Error) -> u8 {
    match error {
        Error::IndexCeiling { .. } | Error::StorageCeiling { .. } => 3,
        Error::OrderMismatch { .. } | Error::Verification(_) => 4,
        _ => 2,
    }
}

fn load_catalog(path: Option<PathBuf>) -> probgen::Result<Catalog> {
    match path.or_else(|| std::env::var_os(CATALOG_ENV).map(PathBuf::from)) {
        Some(path) => Catalog::load(path),
        None => Ok(Catalog::bundled()),
    }
}

fn run(cli: Cli) -> probgen::Result<Outcome> {
    let catalog = load_catalog(cli.catalog)?;
    match cli.command {
        Command::Classes { group } => commands::classes(&catalog, &group).map(Outcome::ok),
        Command::Sigma { group, s, outer } => {
            commands::sigma(&catalog, &group, &s, outer.as_deref()).map(Outcome::ok)
        }
        Command::Info { group } => commands::info(&catalog, &group).map(Outcome::ok),
        Command::Nongen { group, g, s } => commands::nongen(&catalog, &group, &g, &s).map(Outcome::ok),
        Command::Spread { group, s, k, tries, seed, classes } => {
            commands::spread(&catalog, &group, &s, k, tries, seed, classes.as_deref())
        }
        Command::Report { suite: Suite::PaperSmall, format, timings } => {
            report::paper_small(&catalog, format, timings).map(Outcome::ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("probgen: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
