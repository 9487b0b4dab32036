use std::path::PathBuf;

use clap::Args;
use sep_core::facet::{FacetEnumerator, HullOracle};
use sep_core::graph::{complete, cycle, graph6_decode, parse_edge_list, path, star, wedge};
use sep_core::Graph;

use crate::failure::{node_budget, Failure};

#[derive(Args)]
pub struct FacetsArgs {
    /// Graph in graph6 format.
    #[arg(conflicts_with_all = ["edges", "complete", "cycle", "path", "star", "wedge"])]
    graph6: Option<String>,
    /// Edge-list file: a header line `n m`, then one `u v` pair per line.
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
    /// Complete graph on N vertices.
    #[arg(long, value_name = "N")]
    complete: Option<usize>,
    /// Cycle on N vertices.
    #[arg(long, value_name = "N")]
    cycle: Option<usize>,
    /// Path with M edges.
    #[arg(long, value_name = "M")]
    path: Option<usize>,
    /// Star with K leaves.
    #[arg(long, value_name = "K")]
    star: Option<usize>,
    /// Wedge of two named graphs glued at vertex 0, e.g. `--wedge C5 P3`
    /// (Kn complete, Cn cycle, Pm path with m edges, Sk star).
    #[arg(long, num_args = 2, value_names = ["G", "H"])]
    wedge: Option<Vec<String>>,
    /// Print every facet function, one per line, after the count.
    #[arg(long)]
    list: bool,
    /// Cross-check the count against the exact hull computation.
    #[arg(long)]
    verify: bool,
    /// Let `--verify` run the hull computation beyond its size guard.
    #[arg(long)]
    force_oracle: bool,
    /// Count on all cores.
    #[arg(long)]
    parallel: bool,
}

pub fn named_graph(name: &str) -> Result<Graph, Failure> {
    let bad = || Failure::input(format!("unknown graph name {name:?}; use Kn, Cn, Pm or Sk"));
    let (kind, size) = name.split_at(name.chars().next().map_or(0, char::len_utf8));
    let size: usize = size.parse().map_err(|_| bad())?;
    match kind {
        "K" if size >= 1 => Ok(complete(size)),
        "C" if size >= 3 => Ok(cycle(size)),
        "P" if size >= 1 => Ok(path(size)),
        "S" if size >= 1 => Ok(star(size)),
        _ => Err(bad()),
    }
}

fn input_graph(args: &FacetsArgs) -> Result<Graph, Failure> {
    if let Some(text) = &args.graph6 {
        return Ok(graph6_decode(text.trim())?);
    }
    if let Some(file) = &args.edges {
        let text = std::fs::read_to_string(file)
            .map_err(|e| Failure::input(format!("cannot read {}: {e}", file.display())))?;
        return Ok(parse_edge_list(&text)?);
    }
    if let Some(n) = args.complete {
        return Ok(complete(n));
    }
    if let Some(n) = args.cycle {
        if n < 3 {
            return Err(Failure::input("a cycle needs at least 3 vertices"));
        }
        return Ok(cycle(n));
    }
    if let Some(m) = args.path {
        return Ok(path(m));
    }
    if let Some(k) = args.star {
        return Ok(star(k));
    }
    if let Some(names) = &args.wedge {
        return Ok(wedge(&named_graph(&names[0])?, &named_graph(&names[1])?));
    }
    Err(Failure::input(
        "no graph given; pass graph6, --edges, --complete, --cycle, --path, --star or --wedge",
    ))
}

pub fn run(args: FacetsArgs) -> Result<(), Failure> {
    let g = input_graph(&args)?;
    if !g.is_connected() {
        return Err(Failure::input(format!(
            "graph on {} vertices is disconnected",
            g.n()
        )));
    }
    let enumerator = FacetEnumerator::new(&g)?.with_budget(node_budget()?);
    let count = if args.parallel {
        enumerator.count_parallel()?
    } else {
        enumerator.count()?
    };
    println!("{count}");
    if args.verify {
        let oracle = if args.force_oracle {
            HullOracle::unguarded()
        } else {
            HullOracle::new()
        };
        let hull = oracle.facet_count(&g)? as u64;
        if hull != count {
            return Err(Failure::internal(format!(
                "oracle mismatch: enumerator {count}, hull {hull}"
            )));
        }
        eprintln!("verified: hull oracle agrees ({hull})");
    }
    if args.list {
        for f in enumerator.list()? {
            println!("{f}");
        }
    }
    Ok(())
}
