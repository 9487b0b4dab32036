//! Running fraction of random bipartitions whose induced bipartite subgraph is connected.

use std::fmt::Write;

use rand::Rng;

use crate::graph::{Bipartition, Graph};

/// What counts as a connected `B_A`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ScanMode {
    /// The edges of `B_A` form one component; vertices with no crossing edge are ignored.
    #[default]
    EdgeInduced,
    /// `B_A` is connected as a graph on all of `V`, so it is a facet subgraph.
    Spanning,
}

impl ScanMode {
    pub fn tag(self) -> &'static str {
        match self {
            ScanMode::EdgeInduced => "edge-induced",
            ScanMode::Spanning => "spanning",
        }
    }
}

/// `(step, hits)`: after `step` subsets, `hits` of them gave a connected `B_A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanPoint {
    pub step: usize,
    pub hits: usize,
}

impl ScanPoint {
    pub fn fraction(&self) -> f64 {
        self.hits as f64 / self.step as f64
    }
}

/// Reusable connectivity test for `B_A` on one graph.
pub struct BipartiteProbe<'g> {
    g: &'g Graph,
    seen: Vec<bool>,
    stack: Vec<usize>,
}

impl<'g> BipartiteProbe<'g> {
    pub fn new(g: &'g Graph) -> Self {
        BipartiteProbe {
            g,
            seen: vec![false; g.n()],
            stack: Vec::new(),
        }
    }

    /// `side[v]` tells which shore `v` is on.
    pub fn is_connected(&mut self, side: &[bool], mode: ScanMode) -> bool {
        let g = self.g;
        let crosses = |v: usize| g.neighbors(v).iter().any(|&w| side[w] != side[v]);
        let mut active = 0;
        let mut start = None;
        for v in 0..g.n() {
            if crosses(v) {
                active += 1;
                start.get_or_insert(v);
            } else if mode == ScanMode::Spanning {
                return false;
            }
        }
        let Some(start) = start else { return false };
        self.seen.iter_mut().for_each(|s| *s = false);
        self.seen[start] = true;
        self.stack.clear();
        self.stack.push(start);
        let mut reached = 1;
        while let Some(u) = self.stack.pop() {
            for &w in g.neighbors(u) {
                if side[w] != side[u] && !self.seen[w] {
                    self.seen[w] = true;
                    reached += 1;
                    self.stack.push(w);
                }
            }
        }
        reached == active
    }
}

/// Scans `subsets` coin-flip subsets (empty and full draws are redrawn) and
/// reports the running fraction every `interval` subsets, plus the final step.
pub fn bipartition_scan<R: Rng + ?Sized>(
    g: &Graph,
    subsets: usize,
    interval: usize,
    mode: ScanMode,
    rng: &mut R,
) -> Vec<ScanPoint> {
    let n = g.n();
    let mut side = vec![false; n];
    let draws = std::iter::repeat_with(|| loop {
        let mut count = 0;
        for s in side.iter_mut() {
            *s = rng.gen::<bool>();
            count += *s as usize;
        }
        if count > 0 && count < n {
            break Bipartition::from_flags(&side);
        }
    });
    bipartition_scan_with(g, draws.take(subsets), interval, mode)
}

/// Same as [`bipartition_scan`] over caller-supplied subsets.
pub fn bipartition_scan_with<I>(
    g: &Graph,
    subsets: I,
    interval: usize,
    mode: ScanMode,
) -> Vec<ScanPoint>
where
    I: IntoIterator<Item = Bipartition>,
{
    assert!(interval >= 1);
    let mut probe = BipartiteProbe::new(g);
    let mut side = vec![false; g.n()];
    let mut points = Vec::new();
    let mut hits = 0;
    let mut step = 0;
    for part in subsets {
        for (v, s) in side.iter_mut().enumerate() {
            *s = part.contains(v);
        }
        step += 1;
        hits += probe.is_connected(&side, mode) as usize;
        if step % interval == 0 {
            points.push(ScanPoint { step, hits });
        }
    }
    if step % interval != 0 {
        points.push(ScanPoint { step, hits });
    }
    points
}

/// `step,fraction` CSV.
pub fn scan_csv(points: &[ScanPoint], metadata: &[String]) -> String {
    let mut out = String::new();
    for line in metadata {
        writeln!(out, "# {line}").unwrap();
    }
    out.push_str("step,fraction\n");
    for p in points {
        writeln!(out, "{},{}", p.step, p.fraction()).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};
    use crate::samplers::RandomSource;

    #[test]
    fn complete_graph_always_connected() {
        let mut rng = RandomSource::seed_from_u64(4);
        for mode in [ScanMode::EdgeInduced, ScanMode::Spanning] {
            let points = bipartition_scan(&complete(6), 100, 10, mode, &mut rng);
            assert_eq!(points.len(), 10);
            assert!(points.iter().all(|p| p.hits == p.step));
        }
    }

    #[test]
    fn forced_square() {
        let parts = std::iter::repeat_n(Bipartition::from_members(4, [0, 2]), 10);
        let points = bipartition_scan_with(&cycle(4), parts, 10, ScanMode::Spanning);
        assert_eq!(points, vec![ScanPoint { step: 10, hits: 10 }]);
        let one = bipartition_scan_with(
            &cycle(4),
            [Bipartition::from_members(4, [0, 1])],
            10,
            ScanMode::Spanning,
        );
        assert_eq!(one, vec![ScanPoint { step: 1, hits: 0 }]);
    }

    #[test]
    fn modes_differ_on_isolated_vertices() {
        // paw with A = {1, 2}: vertex 3 only touches 0, which is on its side
        let paw = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let side = [false, true, true, false];
        let mut probe = BipartiteProbe::new(&paw);
        assert!(probe.is_connected(&side, ScanMode::EdgeInduced));
        assert!(!probe.is_connected(&side, ScanMode::Spanning));
    }

    #[test]
    fn spanning_mode_matches_facet_subgraph_test() {
        let mut rng = RandomSource::seed_from_u64(12);
        let g = crate::samplers::sample_gnp_connected(9, 0.4, &mut rng, 1000).unwrap();
        let mut probe = BipartiteProbe::new(&g);
        for mask in 1u32..(1 << 9) - 1 {
            let side: Vec<bool> = (0..9).map(|v| mask >> v & 1 == 1).collect();
            let part = Bipartition::from_flags(&side);
            assert_eq!(
                probe.is_connected(&side, ScanMode::Spanning),
                crate::facet::is_facet_subgraph(&g, &part).unwrap()
            );
        }
    }

    #[test]
    fn csv_layout() {
        let csv = scan_csv(&[ScanPoint { step: 10, hits: 9 }], &["seed=1".into()]);
        assert_eq!(csv, "# seed=1\nstep,fraction\n10,0.9\n");
    }
}
