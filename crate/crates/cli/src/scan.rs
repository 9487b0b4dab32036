use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use sep_core::experiments::{
    bipartition_scan, cycle_length_scan, er_threshold_trial, facet_count_invariance_check,
    scan_csv, ScanMode, ThresholdOptions,
};
use sep_core::graph::{graph6_decode, parse_edge_list};
use sep_core::samplers::double_edge_chain;
use sep_core::{ChainConfig, DegreeSequence, Graph, RandomSource};

use crate::ensemble::parse_degrees;
use crate::failure::{emit, seed_or_fresh, Failure};
use crate::BUILD;

#[derive(Args)]
pub struct ScanArgs {
    #[command(subcommand)]
    kind: Kind,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Crossing edges form one component; vertices without crossing edges are ignored.
    EdgeInduced,
    /// Crossing edges connect every vertex.
    Spanning,
}

impl From<Mode> for ScanMode {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::EdgeInduced => ScanMode::EdgeInduced,
            Mode::Spanning => ScanMode::Spanning,
        }
    }
}

#[derive(Subcommand)]
enum Kind {
    /// Running fraction of random subsets whose crossing edges form a connected graph.
    Bipartition {
        /// Scan random connected d-regular graphs sampled by the double-edge chain.
        #[arg(long, value_name = "D", requires = "n", conflicts_with_all = ["graph6", "edges"])]
        regular: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Scan one given graph (graph6) instead.
        #[arg(long, conflicts_with = "edges")]
        graph6: Option<String>,
        /// Scan one given graph (edge-list file) instead.
        #[arg(long, value_name = "FILE")]
        edges: Option<PathBuf>,
        #[arg(long, default_value_t = 5000)]
        subsets: usize,
        /// Number of chain samples to scan.
        #[arg(long, default_value_t = 1)]
        graphs: usize,
        /// Chain proposals (rejections included) before and between sampled graphs.
        #[arg(long, default_value_t = 100_001)]
        swaps: u64,
        /// Subsets between reported points.
        #[arg(long, default_value_t = 10)]
        interval: usize,
        #[arg(long, value_enum, default_value_t = Mode::EdgeInduced)]
        mode: Mode,
        #[arg(long)]
        seed: Option<u64>,
        /// Directory for `scan_<i>.csv`; defaults to the working directory.
        #[arg(long, value_name = "DIR", default_value = ".")]
        out_dir: PathBuf,
    },
    /// Balanced bipartitions of G(n, p) above the threshold, isolating witnesses below it.
    Threshold {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        /// Balanced bipartitions per graph (p > 1/2).
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        graphs: usize,
        /// Allowed deviation of |A| from floor(n/2).
        #[arg(long, default_value_t = 0)]
        width: usize,
        #[arg(long, default_value_t = 10_000)]
        max_rejects: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Facet counts of the unicyclic construction for each cycle length.
    #[command(alias = "cor33")]
    CycleLength {
        /// Comma-separated degree sequence summing to 2n.
        #[arg(long, value_name = "LIST")]
        d: String,
        /// Also check that this many chain variants per cycle length share one count.
        #[arg(long, default_value_t = 0)]
        variants: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

pub fn run(args: ScanArgs) -> Result<(), Failure> {
    match args.kind {
        Kind::Bipartition {
            regular,
            n,
            graph6,
            edges,
            subsets,
            graphs,
            swaps,
            interval,
            mode,
            seed,
            out_dir,
        } => {
            if subsets == 0 || interval == 0 || graphs == 0 {
                return Err(Failure::input(
                    "--subsets, --interval and --graphs must be at least 1",
                ));
            }
            let seed = seed_or_fresh(seed);
            let mut meta = vec![format!(
                "seed={seed} subsets={subsets} interval={interval} mode={}",
                ScanMode::from(mode).tag()
            )];
            let inputs: Vec<Graph> = if let Some(d) = regular {
                let n = n.expect("clap enforces --n with --regular");
                let degrees = DegreeSequence::new(vec![d; n])?;
                let config = ChainConfig::new(seed, graphs)
                    .with_burn_in(swaps)
                    .with_subsample(swaps);
                let run = double_edge_chain(&degrees, &config)?;
                meta.push(format!(
                    "source=double-edge chain, {d}-regular on {n} vertices, {swaps} proposals (rejections included) between samples, acceptance_rate={:.6}",
                    run.summary.acceptance_rate()
                ));
                run.graphs
            } else if let Some(text) = graph6 {
                meta.push("source=graph6 input".into());
                vec![graph6_decode(text.trim())?]
            } else if let Some(file) = edges {
                let text = std::fs::read_to_string(&file)
                    .map_err(|e| Failure::input(format!("cannot read {}: {e}", file.display())))?;
                meta.push("source=edge-list input".into());
                vec![parse_edge_list(&text)?]
            } else {
                return Err(Failure::input(
                    "give --regular D --n N, --graph6 or --edges",
                ));
            };
            meta.push(format!("build={BUILD}"));
            std::fs::create_dir_all(&out_dir)
                .map_err(|e| Failure::input(format!("cannot create {}: {e}", out_dir.display())))?;
            for (i, g) in inputs.iter().enumerate() {
                if !g.is_connected() {
                    return Err(Failure::input(format!("graph {i} is disconnected")));
                }
                let mut rng = RandomSource::seed_from_u64(seed).derive(i as u64 + 1);
                let points = bipartition_scan(g, subsets, interval, mode.into(), &mut rng);
                let mut lines = meta.clone();
                lines.push(format!("graph={i} n={} m={}", g.n(), g.m()));
                let path = out_dir.join(format!("scan_{i}.csv"));
                emit(Some(&path), &scan_csv(&points, &lines))?;
                let last = points.last().expect("at least one subset");
                println!(
                    "graph {i}: b_{} = {:.6} -> {}",
                    last.step,
                    last.fraction(),
                    path.display()
                );
            }
            Ok(())
        }
        Kind::Threshold {
            n,
            p,
            trials,
            graphs,
            width,
            max_rejects,
            seed,
            out,
        } => {
            if graphs == 0 {
                return Err(Failure::input("--graphs must be at least 1"));
            }
            if !(p > 0.0 && p < 1.0) || p == 0.5 {
                return Err(Failure::input(format!(
                    "p must lie in (0, 1) and differ from 1/2, got {p}"
                )));
            }
            let seed = seed_or_fresh(seed);
            let options = ThresholdOptions { width, max_rejects };
            let mut text = String::new();
            writeln!(
                text,
                "# seed={seed} n={n} p={p} trials={trials} width={width} build={BUILD}"
            )
            .unwrap();
            writeln!(text, "graph,trials,connected,connected_fraction,witness_vertex,witness_degree,witness_found,witness_disconnected").unwrap();
            let (mut connected, mut total, mut witnessed) = (0, 0, 0);
            for i in 0..graphs {
                let mut rng = RandomSource::seed_from_u64(seed).derive(i as u64);
                let s = er_threshold_trial(n, p, trials, &options, &mut rng)?;
                connected += s.connected;
                total += s.trials;
                let fraction = s
                    .connected_fraction()
                    .map_or(String::new(), |f| format!("{f:.6}"));
                let (v, deg, found, disc) = match &s.witness {
                    Some(w) => (
                        w.vertex.to_string(),
                        w.degree.to_string(),
                        w.subset.is_some(),
                        w.disconnected,
                    ),
                    None => (String::new(), String::new(), false, false),
                };
                witnessed += disc as usize;
                writeln!(
                    text,
                    "{i},{},{},{fraction},{v},{deg},{found},{disc}",
                    s.trials, s.connected
                )
                .unwrap();
            }
            emit(out.as_deref(), &text)?;
            if p > 0.5 {
                eprintln!(
                    "connected_fraction {:.6} ({connected}/{total})",
                    connected as f64 / total.max(1) as f64
                );
            } else {
                eprintln!("witness disconnects B_A in {witnessed}/{graphs} graphs");
            }
            Ok(())
        }
        Kind::CycleLength {
            d,
            variants,
            seed,
            out,
        } => {
            let d = parse_degrees(&d)?;
            let table = cycle_length_scan(&d)?;
            let argmax = table.argmax();
            let mut text = String::new();
            writeln!(
                text,
                "# k={} predicted={} argmax={argmax} build={BUILD}",
                table.k, table.predicted
            )
            .unwrap();
            let mut header = "cycle_len,facets,argmax".to_string();
            let mut rng = None;
            if variants > 0 {
                let seed = seed_or_fresh(seed);
                writeln!(text, "# seed={seed} variants={variants}").unwrap();
                header.push_str(",variants,invariant");
                rng = Some(RandomSource::seed_from_u64(seed));
            }
            writeln!(text, "{header}").unwrap();
            for row in &table.rows {
                write!(
                    text,
                    "{},{},{}",
                    row.cycle_len,
                    row.facets,
                    (row.cycle_len == argmax) as u8
                )
                .unwrap();
                if let Some(rng) = rng.as_mut() {
                    let r = facet_count_invariance_check(&d, row.cycle_len, variants, rng)?;
                    if r.vacuous() {
                        eprintln!(
                            "warning: only one graph with cycle length {}; invariance is vacuous",
                            row.cycle_len
                        );
                    }
                    write!(text, ",{},{}", r.graphs.len(), r.invariant()).unwrap();
                }
                writeln!(text).unwrap();
            }
            emit(out.as_deref(), &text)
        }
    }
}
