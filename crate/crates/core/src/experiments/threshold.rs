//! Finite-size trials around the `p = 1/2` threshold for connected balanced `B_A`.

use rand::seq::{index, SliceRandom};
use rand::Rng;

use super::scan::{BipartiteProbe, ScanMode};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::samplers::sample_gnp_connected;

#[derive(Clone, Debug)]
pub struct ThresholdOptions {
    /// `|A|` is drawn uniformly from `floor(n/2) ± width`.
    pub width: usize,
    pub max_rejects: u64,
}

impl Default for ThresholdOptions {
    fn default() -> Self {
        ThresholdOptions {
            width: 0,
            max_rejects: 10_000,
        }
    }
}

/// Subcritical witness: a minimum-degree vertex `v` and a `floor(n/2)`-set
/// containing `v` and all its neighbors, which leaves `v` isolated in `B_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub vertex: usize,
    pub degree: usize,
    /// `None` when `deg(v) >= floor(n/2)` and no such set exists.
    pub subset: Option<Bipartition>,
    pub disconnected: bool,
}

#[derive(Clone, Debug)]
pub struct ThresholdSummary {
    pub n: usize,
    pub p: f64,
    pub graph: Graph,
    pub trials: usize,
    /// Supercritical: balanced bipartitions whose `B_A` is connected and spanning.
    pub connected: usize,
    pub witness: Option<Witness>,
}

impl ThresholdSummary {
    pub fn connected_fraction(&self) -> Option<f64> {
        (self.trials > 0).then(|| self.connected as f64 / self.trials as f64)
    }
}

/// Draws a connected `G(n, p)`. For `p > 1/2` tests `trials` random balanced
/// bipartitions; for `p < 1/2` builds the isolating witness.
pub fn er_threshold_trial<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    trials: usize,
    options: &ThresholdOptions,
    rng: &mut R,
) -> Result<ThresholdSummary> {
    if !(p > 0.0 && p < 1.0) || p == 0.5 {
        return Err(Error::invalid(format!(
            "threshold trials need p in (0, 1) minus 1/2, got {p}"
        )));
    }
    if n < 2 {
        return Err(Error::invalid(
            "threshold trials need at least two vertices",
        ));
    }
    let g = sample_gnp_connected(n, p, rng, options.max_rejects)?;
    if p > 0.5 {
        let half = n / 2;
        let mut probe = BipartiteProbe::new(&g);
        let mut side = vec![false; n];
        let mut connected = 0;
        for _ in 0..trials {
            let lo = half.saturating_sub(options.width).max(1);
            let hi = (half + options.width).min(n - 1);
            let size = rng.gen_range(lo..=hi);
            side.iter_mut().for_each(|s| *s = false);
            for v in index::sample(rng, n, size) {
                side[v] = true;
            }
            connected += probe.is_connected(&side, ScanMode::Spanning) as usize;
        }
        Ok(ThresholdSummary {
            n,
            p,
            graph: g,
            trials,
            connected,
            witness: None,
        })
    } else {
        let witness = isolating_witness(&g, rng);
        Ok(ThresholdSummary {
            n,
            p,
            graph: g,
            trials: 0,
            connected: 0,
            witness: Some(witness),
        })
    }
}

fn isolating_witness<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Witness {
    let n = g.n();
    let half = n / 2;
    let vertex = (0..n).min_by_key(|&v| g.degree(v)).expect("nonempty graph");
    let degree = g.degree(vertex);
    if degree >= half {
        return Witness {
            vertex,
            degree,
            subset: None,
            disconnected: false,
        };
    }
    let mut members = vec![vertex];
    members.extend_from_slice(g.neighbors(vertex));
    let mut others: Vec<usize> = (0..n)
        .filter(|&u| u != vertex && !g.has_edge(u, vertex))
        .collect();
    others.shuffle(rng);
    members.extend(others.into_iter().take(half - members.len()));
    let subset = Bipartition::from_members(n, members);
    let disconnected = !g.induced_bipartite_subgraph(&subset).is_connected();
    Witness {
        vertex,
        degree,
        subset: Some(subset),
        disconnected,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samplers::RandomSource;

    #[test]
    fn near_complete_graph_is_always_connected() {
        let mut rng = RandomSource::seed_from_u64(1);
        let s =
            er_threshold_trial(4, 0.999_999, 20, &ThresholdOptions::default(), &mut rng).unwrap();
        assert_eq!(s.graph, crate::graph::complete(4));
        assert_eq!(s.connected_fraction(), Some(1.0));
    }

    #[test]
    fn subcritical_witness_isolates_its_vertex() {
        let mut rng = RandomSource::seed_from_u64(2);
        let s = er_threshold_trial(60, 0.3, 0, &ThresholdOptions::default(), &mut rng).unwrap();
        let w = s.witness.unwrap();
        let a = w.subset.clone().unwrap();
        assert_eq!(a.len(), 30);
        assert!(a.contains(w.vertex));
        assert!(s.graph.neighbors(w.vertex).iter().all(|&u| a.contains(u)));
        assert!(w.disconnected);
    }

    #[test]
    fn impossible_witness_is_reported() {
        let mut rng = RandomSource::seed_from_u64(3);
        let s = er_threshold_trial(6, 0.499, 0, &ThresholdOptions::default(), &mut rng);
        // either a witness or a clean refusal, never a panic
        let w = s.unwrap().witness.unwrap();
        if w.degree >= 3 {
            assert!(w.subset.is_none() && !w.disconnected);
        }
    }

    #[test]
    fn rejects_bad_probabilities() {
        let mut rng = RandomSource::seed_from_u64(0);
        for p in [0.0, 0.5, 1.0, -0.2, f64::NAN] {
            assert!(er_threshold_trial(10, p, 1, &ThresholdOptions::default(), &mut rng).is_err());
        }
    }

    #[test]
    fn width_window() {
        let mut rng = RandomSource::seed_from_u64(5);
        let options = ThresholdOptions {
            width: 3,
            ..Default::default()
        };
        let s = er_threshold_trial(40, 0.9, 50, &options, &mut rng).unwrap();
        assert_eq!(s.trials, 50);
        assert!(s.connected_fraction().unwrap() > 0.9);
    }
}
