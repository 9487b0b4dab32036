//! `sep`: facet counts, random-graph ensembles, scans and plots from the command line.

mod ensemble;
mod facets;
mod failure;
mod plot;
mod scan;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use failure::Failure;

/// Build identifier recorded in CSV metadata.
pub(crate) const BUILD: &str = env!("SEP_BUILD_DESCRIBE");

#[derive(Parser)]
#[command(
    name = "sep",
    version,
    about = "Facets of symmetric edge polytopes and random graph experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count (and optionally list) the facets of one graph.
    Facets(facets::FacetsArgs),
    /// Sample an ensemble and write `C_WS` and facet counts as CSV.
    Ensemble(ensemble::EnsembleArgs),
    /// Bipartition scans, threshold trials and cycle-length scans.
    Scan(scan::ScanArgs),
    /// Render a CSV column pair as a standalone SVG.
    Plot(plot::PlotArgs),
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Facets(args) => facets::run(args),
        Command::Ensemble(args) => ensemble::run(args),
        Command::Scan(args) => scan::run(args),
        Command::Plot(args) => plot::run(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {:#}", failure.error);
            ExitCode::from(failure.code)
        }
    }
}
