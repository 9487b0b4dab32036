use std::path::PathBuf;

use clap::{Args, Subcommand};
use sep_core::experiments::{ensemble_csv, ensemble_metrics, gnp_ensemble, MetricsOptions};
use sep_core::graph::{erdos_gallai_graphical, has_connected_realization};
use sep_core::samplers::{double_edge_chain, single_edge_chain, ChainSummary};
use sep_core::{ChainConfig, DegreeSequence, Graph, RandomSource};

use crate::failure::{emit, node_budget, seed_or_fresh, Failure};
use crate::BUILD;

#[derive(Args)]
pub struct EnsembleArgs {
    #[command(subcommand)]
    kind: Kind,
}

#[derive(Subcommand)]
enum Kind {
    /// Connected draws from G(n, p), disconnected draws rejected.
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        /// Rejected draws allowed per sample.
        #[arg(long, default_value_t = 10_000)]
        max_rejects: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Single-edge swap chain over connected graphs with n vertices and m edges.
    Edges {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        chain: ChainFlags,
        #[command(flatten)]
        common: Common,
    },
    /// Double-edge swap chain over connected graphs with a fixed degree sequence.
    Degseq {
        /// Comma-separated degrees, e.g. `3,3,2,2,1,1`.
        #[arg(
            long,
            value_name = "LIST",
            required_unless_present = "d_file",
            conflicts_with = "d_file"
        )]
        d: Option<String>,
        /// File holding the degrees, separated by commas or whitespace.
        #[arg(long, value_name = "FILE")]
        d_file: Option<PathBuf>,
        #[command(flatten)]
        chain: ChainFlags,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 500)]
    samples: usize,
    /// Seed; a fresh one is generated and printed to stderr when omitted.
    #[arg(long)]
    seed: Option<u64>,
    /// Output CSV path (stdout when omitted).
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads for the facet counts; defaults to the logical core count.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct ChainFlags {
    /// Proposals before the first sample (default 10·n·m).
    #[arg(long)]
    burn_in: Option<u64>,
    /// Proposals between samples (default 11; 5 for degree chains with n < 15).
    #[arg(long)]
    subsample: Option<u64>,
}

fn chain_config(seed: u64, common: &Common, chain: &ChainFlags) -> ChainConfig {
    let mut config = ChainConfig::new(seed, common.samples);
    config.burn_in = chain.burn_in;
    config.subsample = chain.subsample;
    config
}

fn summary_lines(s: &ChainSummary) -> Vec<String> {
    vec![
        format!(
            "chain={} seed={} burn_in={} subsample={}",
            s.kind.tag(),
            s.seed,
            s.burn_in,
            s.subsample
        ),
        format!(
            "proposals={} accepted={} acceptance_rate={:.6}",
            s.proposals,
            s.accepted,
            s.acceptance_rate()
        ),
    ]
}

pub fn parse_degrees(text: &str) -> Result<DegreeSequence, Failure> {
    let normalized: Vec<&str> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    Ok(DegreeSequence::parse(&normalized.join(","))?)
}

fn check_degrees(d: &DegreeSequence) -> Result<(), Failure> {
    if !erdos_gallai_graphical(d) {
        return Err(sep_core::Error::NotGraphical.into());
    }
    if !has_connected_realization(d) {
        return Err(sep_core::Error::NoConnectedRealization.into());
    }
    Ok(())
}

pub fn run(args: EnsembleArgs) -> Result<(), Failure> {
    // validate everything before sampling
    match &args.kind {
        Kind::Gnp { n, p, common, .. } => {
            if !(0.0..=1.0).contains(p) {
                return Err(Failure::input(format!("p must lie in [0, 1], got {p}")));
            }
            if *n < 2 || *p == 0.0 {
                return Err(Failure::input(
                    "connected G(n, p) draws need n >= 2 and p > 0",
                ));
            }
            validate_common(common)?;
        }
        Kind::Edges { n, m, common, .. } => {
            if *n < 2 || *m < n - 1 || *m > n * (n - 1) / 2 {
                return Err(Failure::input(format!(
                    "no connected graph has {n} vertices and {m} edges"
                )));
            }
            validate_common(common)?;
        }
        Kind::Degseq { common, .. } => validate_common(common)?,
    }

    let (graphs, seed, tag, mut meta, common): (Vec<Graph>, u64, &str, Vec<String>, Common) =
        match args.kind {
            Kind::Gnp {
                n,
                p,
                max_rejects,
                common,
            } => {
                let seed = seed_or_fresh(common.seed);
                let graphs = gnp_ensemble(
                    n,
                    p,
                    common.samples,
                    max_rejects,
                    &mut RandomSource::seed_from_u64(seed),
                )?;
                let meta = vec![format!(
                    "chain=gnp seed={seed} n={n} p={p} max_rejects={max_rejects}"
                )];
                (graphs, seed, "gnp", meta, common)
            }
            Kind::Edges {
                n,
                m,
                chain,
                common,
            } => {
                let seed = seed_or_fresh(common.seed);
                let run = single_edge_chain(n, m, &chain_config(seed, &common, &chain))?;
                (
                    run.graphs,
                    seed,
                    "edges",
                    summary_lines(&run.summary),
                    common,
                )
            }
            Kind::Degseq {
                d,
                d_file,
                chain,
                common,
            } => {
                let text = match (d, d_file) {
                    (Some(d), _) => d,
                    (None, Some(file)) => std::fs::read_to_string(&file).map_err(|e| {
                        Failure::input(format!("cannot read {}: {e}", file.display()))
                    })?,
                    (None, None) => unreachable!("clap requires one of --d and --d-file"),
                };
                let d = parse_degrees(&text)?;
                check_degrees(&d)?;
                let seed = seed_or_fresh(common.seed);
                let run = double_edge_chain(&d, &chain_config(seed, &common, &chain))?;
                (
                    run.graphs,
                    seed,
                    "degseq",
                    summary_lines(&run.summary),
                    common,
                )
            }
        };
    meta.push(format!("build={BUILD}"));

    let options = MetricsOptions {
        node_budget: node_budget()?,
        parallel: true,
    };
    let records = with_jobs(common.jobs, || {
        ensemble_metrics(&graphs, seed, tag, &options)
    })??;
    emit(common.out.as_deref(), &ensemble_csv(&records, &meta))
}

fn validate_common(common: &Common) -> Result<(), Failure> {
    if common.samples == 0 {
        return Err(Failure::input("--samples must be at least 1"));
    }
    if common.jobs == Some(0) {
        return Err(Failure::input("--jobs must be at least 1"));
    }
    Ok(())
}

/// Runs `f` on a dedicated pool of `jobs` threads, or on the global pool.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Failure::internal(format!("cannot start worker pool: {e}"))),
    }
}
