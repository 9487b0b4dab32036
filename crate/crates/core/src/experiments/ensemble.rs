use std::fmt::Write;

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::facet::FacetEnumerator;
use crate::graph::{average_local_clustering, graph6_encode, Graph};
use crate::samplers::sample_gnp_connected;
use crate::scalar::render_decimal;
use crate::BigRational;

pub const ENSEMBLE_HEADER: &str = "index,seed,chain,n,m,graph6,cws,facets";

/// Digits after the decimal point when rendering `C_WS`.
pub const CWS_DIGITS: u32 = 6;

/// One ensemble member with its clustering coefficient and facet count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnsembleRecord {
    pub index: usize,
    pub seed: u64,
    pub chain: String,
    pub n: usize,
    pub m: usize,
    pub graph6: String,
    pub cws: BigRational,
    pub facets: u64,
}

impl EnsembleRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.index,
            self.seed,
            self.chain,
            self.n,
            self.m,
            self.graph6,
            render_decimal(&self.cws, CWS_DIGITS),
            self.facets
        )
    }
}

#[derive(Clone, Debug)]
pub struct MetricsOptions {
    pub node_budget: u64,
    pub parallel: bool,
}

impl Default for MetricsOptions {
    fn default() -> Self {
        MetricsOptions {
            node_budget: crate::facet::DEFAULT_NODE_BUDGET,
            parallel: true,
        }
    }
}

/// `C_WS` and `N(G)` for every graph, in input order.
pub fn ensemble_metrics(
    graphs: &[Graph],
    seed: u64,
    chain: &str,
    options: &MetricsOptions,
) -> Result<Vec<EnsembleRecord>> {
    if let Some(index) = graphs.iter().position(|g| !g.is_connected()) {
        return Err(Error::invalid(format!(
            "ensemble member {index} is disconnected"
        )));
    }
    let record = |(index, g): (usize, &Graph)| -> Result<EnsembleRecord> {
        let facets = FacetEnumerator::new(g)?
            .with_budget(options.node_budget)
            .count()?;
        Ok(EnsembleRecord {
            index,
            seed,
            chain: chain.to_string(),
            n: g.n(),
            m: g.m(),
            graph6: graph6_encode(g),
            cws: average_local_clustering(g),
            facets,
        })
    };
    if options.parallel {
        graphs.par_iter().enumerate().map(record).collect()
    } else {
        graphs.iter().enumerate().map(record).collect()
    }
}

/// `samples` connected draws from `G(n, p)`.
pub fn gnp_ensemble<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    samples: usize,
    max_rejects: u64,
    rng: &mut R,
) -> Result<Vec<Graph>> {
    (0..samples)
        .map(|_| sample_gnp_connected(n, p, rng, max_rejects))
        .collect()
}

/// CSV with `#` metadata lines, the header row, and one row per record.
pub fn ensemble_csv(records: &[EnsembleRecord], metadata: &[String]) -> String {
    let mut out = String::new();
    for line in metadata {
        writeln!(out, "# {line}").unwrap();
    }
    writeln!(out, "{ENSEMBLE_HEADER}").unwrap();
    for r in records {
        writeln!(out, "{}", r.csv_row()).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};
    use num_traits::{One, Zero};

    #[test]
    fn complete_and_cycle_records() {
        let records = ensemble_metrics(
            &[complete(4), cycle(5)],
            9,
            "input",
            &MetricsOptions::default(),
        )
        .unwrap();
        assert_eq!(records.len(), 2);
        assert!(records[0].cws.is_one());
        assert_eq!(records[0].facets, 14);
        assert!(records[1].cws.is_zero());
        assert_eq!(records[1].facets, 30);
        assert_eq!(records[0].csv_row(), "0,9,input,4,6,C~,1.000000,14");
    }

    #[test]
    fn disconnected_member_named() {
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let err = ensemble_metrics(&[complete(3), two], 0, "input", &MetricsOptions::default())
            .unwrap_err();
        assert_eq!(err.to_string(), "ensemble member 1 is disconnected");
    }

    #[test]
    fn csv_has_header_and_metadata() {
        let records =
            ensemble_metrics(&[complete(3)], 1, "gnp", &MetricsOptions::default()).unwrap();
        let csv = ensemble_csv(&records, &["seed=1".to_string()]);
        assert_eq!(
            csv,
            "# seed=1\nindex,seed,chain,n,m,graph6,cws,facets\n0,1,gnp,3,3,Bw,1.000000,6\n"
        );
    }
}
