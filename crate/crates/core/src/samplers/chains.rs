//! Swap Markov chains over connected graphs.
//!
//! Both chains propose a move uniformly at random and stay put when the move
//! would leave the state space (loop, multi-edge or disconnection), so every
//! proposal counts as one step whether or not it is accepted.

use rand::Rng;

use super::dyngraph::DynGraph;
use super::gnp::random_connected_nm;
use super::RandomSource;
use crate::error::{Error, Result};
use crate::graph::{connected_realization, erdos_gallai_graphical, has_connected_realization};
use crate::graph::{DegreeSequence, Graph};

const INITIAL_STATE_TRIES: usize = 1000;

/// Seed, burn-in, thinning and sample count for one chain run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainConfig {
    pub seed: u64,
    /// Proposals before the first emitted state; defaults to `10 n m`.
    pub burn_in: Option<u64>,
    /// Proposals between emitted states; the default depends on the chain.
    pub subsample: Option<u64>,
    pub samples: usize,
}

impl ChainConfig {
    pub fn new(seed: u64, samples: usize) -> Self {
        ChainConfig {
            seed,
            burn_in: None,
            subsample: None,
            samples,
        }
    }

    pub fn with_burn_in(mut self, burn_in: u64) -> Self {
        self.burn_in = Some(burn_in);
        self
    }

    pub fn with_subsample(mut self, subsample: u64) -> Self {
        self.subsample = Some(subsample);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::invalid("sample count must be at least 1"));
        }
        if self.subsample == Some(0) {
            return Err(Error::invalid("subsample interval must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChainKind {
    Gnp,
    Edges,
    Degseq,
}

impl ChainKind {
    pub fn tag(self) -> &'static str {
        match self {
            ChainKind::Gnp => "gnp",
            ChainKind::Edges => "edges",
            ChainKind::Degseq => "degseq",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSummary {
    pub kind: ChainKind,
    pub seed: u64,
    pub burn_in: u64,
    pub subsample: u64,
    pub proposals: u64,
    pub accepted: u64,
}

impl ChainSummary {
    pub fn acceptance_rate(&self) -> f64 {
        if self.proposals == 0 {
            0.0
        } else {
            self.accepted as f64 / self.proposals as f64
        }
    }
}

#[derive(Clone, Debug)]
pub struct ChainRun {
    pub graphs: Vec<Graph>,
    pub summary: ChainSummary,
}

/// Result of one explicit swap: the new state, or the old one when rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapOutcome {
    pub graph: Graph,
    pub accepted: bool,
}

/// Walk on connected graphs with fixed `(n, m)`: delete a uniform edge, add a
/// uniform non-edge, reject if the result is disconnected.
pub struct SingleEdgeChain {
    state: DynGraph,
    rng: RandomSource,
    proposals: u64,
    accepted: u64,
}

impl SingleEdgeChain {
    pub fn new(start: &Graph, rng: RandomSource) -> Result<Self> {
        if !start.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(SingleEdgeChain {
            state: DynGraph::from_graph(start),
            rng,
            proposals: 0,
            accepted: 0,
        })
    }

    /// One proposal; returns whether it was accepted.
    pub fn step(&mut self) -> bool {
        self.proposals += 1;
        let n = self.state.n();
        let m = self.state.m();
        if m == 0 || m == n * (n - 1) / 2 {
            return false;
        }
        let index = self.rng.gen_range(0..m);
        let (u, v) = loop {
            let u = self.rng.gen_range(0..n);
            let v = self.rng.gen_range(0..n);
            if u != v && !self.state.has_edge(u, v) {
                break (u, v);
            }
        };
        let ok = try_single(&mut self.state, index, (u, v));
        self.accepted += ok as u64;
        ok
    }

    pub fn graph(&self) -> Graph {
        self.state.to_graph()
    }

    pub fn proposals(&self) -> u64 {
        self.proposals
    }

    pub fn accepted(&self) -> u64 {
        self.accepted
    }
}

fn try_single(state: &mut DynGraph, index: usize, add: (usize, usize)) -> bool {
    let removed = state.edge(index);
    state.replace(index, add.0, add.1);
    if state.linked(removed.0, removed.1) {
        true
    } else {
        let (a, b) = state.edge(index);
        debug_assert_eq!((a, b), (add.0.min(add.1), add.0.max(add.1)));
        state.replace(index, removed.0, removed.1);
        false
    }
}

/// Walk on connected graphs with a fixed degree sequence: pick an ordered pair
/// of distinct edges, orient each at random as `uv`, `xy`, and rewire to
/// `ux`, `vy`.
pub struct DoubleEdgeChain {
    state: DynGraph,
    rng: RandomSource,
    proposals: u64,
    accepted: u64,
}

impl DoubleEdgeChain {
    pub fn new(start: &Graph, rng: RandomSource) -> Result<Self> {
        if !start.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(DoubleEdgeChain {
            state: DynGraph::from_graph(start),
            rng,
            proposals: 0,
            accepted: 0,
        })
    }

    pub fn step(&mut self) -> bool {
        self.proposals += 1;
        let m = self.state.m();
        if m < 2 {
            return false;
        }
        let i = self.rng.gen_range(0..m);
        let mut j = self.rng.gen_range(0..m - 1);
        if j >= i {
            j += 1;
        }
        let (mut u, mut v) = self.state.edge(i);
        if self.rng.gen::<bool>() {
            std::mem::swap(&mut u, &mut v);
        }
        let (mut x, mut y) = self.state.edge(j);
        if self.rng.gen::<bool>() {
            std::mem::swap(&mut x, &mut y);
        }
        let ok = try_double(&mut self.state, (i, u, v), (j, x, y));
        self.accepted += ok as u64;
        ok
    }

    pub fn graph(&self) -> Graph {
        self.state.to_graph()
    }

    pub fn proposals(&self) -> u64 {
        self.proposals
    }

    pub fn accepted(&self) -> u64 {
        self.accepted
    }
}

fn try_double(
    state: &mut DynGraph,
    first: (usize, usize, usize),
    second: (usize, usize, usize),
) -> bool {
    let (i, u, v) = first;
    let (j, x, y) = second;
    if u == x || v == y || state.has_edge(u, x) || state.has_edge(v, y) {
        return false;
    }
    state.replace(i, u, x);
    state.replace(j, v, y);
    // every component of G - uv - xy meets {u, v, x, y}; ux and vy glue them
    // into at most two pieces, one holding u and one holding v
    if state.linked(u, v) {
        true
    } else {
        state.replace(i, u, v);
        state.replace(j, x, y);
        false
    }
}

/// Random single-edge move on a connected graph.
pub fn single_edge_swap_step(g: &Graph, rng: &mut RandomSource) -> Graph {
    let mut chain = SingleEdgeChain {
        state: DynGraph::from_graph(g),
        rng: rng.clone(),
        proposals: 0,
        accepted: 0,
    };
    chain.step();
    let out = chain.graph();
    *rng = chain.rng;
    out
}

/// Random double-edge move on a connected graph.
pub fn double_edge_swap_step(g: &Graph, rng: &mut RandomSource) -> Graph {
    let mut chain = DoubleEdgeChain {
        state: DynGraph::from_graph(g),
        rng: rng.clone(),
        proposals: 0,
        accepted: 0,
    };
    chain.step();
    let out = chain.graph();
    *rng = chain.rng;
    out
}

/// Deletes edge `remove` and adds non-edge `add`, keeping the result only if it is connected.
pub fn apply_single_edge_swap(
    g: &Graph,
    remove: (usize, usize),
    add: (usize, usize),
) -> Result<SwapOutcome> {
    let (a, b) = (remove.0.min(remove.1), remove.0.max(remove.1));
    let index = g
        .edges()
        .binary_search(&(a, b))
        .map_err(|_| Error::invalid(format!("({a}, {b}) is not an edge")))?;
    if add.0 == add.1 || add.0 >= g.n() || add.1 >= g.n() || g.has_edge(add.0, add.1) {
        return Err(Error::invalid(format!("{add:?} is not a non-edge")));
    }
    let mut state = DynGraph::from_graph(g);
    let accepted = try_single(&mut state, index, add);
    Ok(SwapOutcome {
        graph: state.to_graph(),
        accepted,
    })
}

/// Replaces edges `uv` and `xy` by `ux` and `vy`; rejected on loops,
/// multi-edges or disconnection.
pub fn apply_double_edge_swap(
    g: &Graph,
    first: (usize, usize),
    second: (usize, usize),
) -> Result<SwapOutcome> {
    let find = |(p, q): (usize, usize)| {
        g.edges()
            .binary_search(&(p.min(q), p.max(q)))
            .map_err(|_| Error::invalid(format!("({p}, {q}) is not an edge")))
    };
    let (i, j) = (find(first)?, find(second)?);
    if i == j {
        return Err(Error::invalid(
            "a double-edge swap needs two distinct edges",
        ));
    }
    let mut state = DynGraph::from_graph(g);
    let accepted = try_double(&mut state, (i, first.0, first.1), (j, second.0, second.1));
    Ok(SwapOutcome {
        graph: state.to_graph(),
        accepted,
    })
}

fn run<F>(
    config: &ChainConfig,
    burn_in: u64,
    subsample: u64,
    mut step: F,
    mut snapshot: impl FnMut() -> Graph,
) -> (Vec<Graph>, u64)
where
    F: FnMut() -> bool,
{
    let mut accepted = 0;
    for _ in 0..burn_in {
        accepted += step() as u64;
    }
    let mut graphs = Vec::with_capacity(config.samples);
    for _ in 0..config.samples {
        for _ in 0..subsample {
            accepted += step() as u64;
        }
        graphs.push(snapshot());
    }
    (graphs, accepted)
}

/// Ensemble of connected graphs with `n` vertices and `m` edges.
pub fn single_edge_chain(n: usize, m: usize, config: &ChainConfig) -> Result<ChainRun> {
    config.validate()?;
    let mut rng = RandomSource::seed_from_u64(config.seed);
    let start = random_connected_nm(n, m, INITIAL_STATE_TRIES, &mut rng)?;
    let burn_in = config.burn_in.unwrap_or(10 * (n * m) as u64);
    let subsample = config.subsample.unwrap_or(11);
    let chain = std::cell::RefCell::new(SingleEdgeChain::new(&start, rng)?);
    let (graphs, accepted) = run(
        config,
        burn_in,
        subsample,
        || chain.borrow_mut().step(),
        || chain.borrow().graph(),
    );
    let proposals = chain.borrow().proposals();
    Ok(ChainRun {
        graphs,
        summary: ChainSummary {
            kind: ChainKind::Edges,
            seed: config.seed,
            burn_in,
            subsample,
            proposals,
            accepted,
        },
    })
}

/// Ensemble of connected graphs realizing `d`, started from Havel–Hakimi.
pub fn double_edge_chain(d: &DegreeSequence, config: &ChainConfig) -> Result<ChainRun> {
    config.validate()?;
    if !erdos_gallai_graphical(d) {
        return Err(Error::NotGraphical);
    }
    if !has_connected_realization(d) {
        return Err(Error::NoConnectedRealization);
    }
    let mut rng = RandomSource::seed_from_u64(config.seed);
    let start = connected_realization(d, &mut rng)?;
    let n = d.len();
    let burn_in = config.burn_in.unwrap_or(10 * (n * start.m()) as u64);
    let subsample = config.subsample.unwrap_or(if n < 15 { 5 } else { 11 });
    let chain = std::cell::RefCell::new(DoubleEdgeChain::new(&start, rng)?);
    let (graphs, accepted) = run(
        config,
        burn_in,
        subsample,
        || chain.borrow_mut().step(),
        || chain.borrow().graph(),
    );
    let proposals = chain.borrow().proposals();
    Ok(ChainRun {
        graphs,
        summary: ChainSummary {
            kind: ChainKind::Degseq,
            seed: config.seed,
            burn_in,
            subsample,
            proposals,
            accepted,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};

    #[test]
    fn single_edge_examples() {
        let c4 = cycle(4);
        let out = apply_single_edge_swap(&c4, (0, 1), (0, 2)).unwrap();
        assert!(out.accepted);
        assert_eq!(
            out.graph,
            Graph::from_edges(4, [(1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
        );

        let s = star(3);
        let out = apply_single_edge_swap(&s, (0, 1), (1, 2)).unwrap();
        assert!(out.accepted && out.graph.is_connected());

        let p = path(2);
        let out = apply_single_edge_swap(&p, (0, 1), (0, 2)).unwrap();
        assert!(out.accepted);
        assert_eq!(out.graph, Graph::from_edges(3, [(1, 2), (0, 2)]).unwrap());
    }

    #[test]
    fn single_edge_rejects_disconnection() {
        // removing the bridge of a paw and adding a chord inside the triangle's side
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        let out = apply_single_edge_swap(&g, (2, 3), (0, 4)).unwrap();
        assert!(out.accepted);
        let out = apply_single_edge_swap(&g, (3, 4), (1, 3)).unwrap();
        assert!(!out.accepted);
        assert_eq!(out.graph, g);
        assert!(apply_single_edge_swap(&g, (0, 3), (1, 3)).is_err());
        assert!(apply_single_edge_swap(&g, (0, 1), (0, 2)).is_err());
    }

    #[test]
    fn double_edge_examples() {
        let c6 = cycle(6);
        let out = apply_double_edge_swap(&c6, (0, 1), (3, 4)).unwrap();
        assert!(out.accepted);
        assert_eq!(out.graph.degrees(), vec![2; 6]);
        assert!(out.graph.is_connected());
        assert!(out.graph.has_edge(0, 3) && out.graph.has_edge(1, 4));

        // shared vertex 1: rewiring (1,0),(1,2) -> (1,1) is a loop
        let out = apply_double_edge_swap(&c6, (1, 0), (1, 2)).unwrap();
        assert!(!out.accepted);
        assert_eq!(out.graph, c6);

        let c4 = cycle(4);
        let out = apply_double_edge_swap(&c4, (0, 1), (2, 3)).unwrap();
        assert!(
            out.accepted,
            "(0,2),(1,3) with 12, 30 is the 4-cycle 0-2-1-3"
        );
        assert_eq!(out.graph.unique_cycle_length(), Some(4));
        let out = apply_double_edge_swap(&c4, (0, 1), (3, 2)).unwrap();
        assert!(!out.accepted, "(0,3),(1,2) duplicate existing edges");
    }

    #[test]
    fn double_edge_rejects_disconnection() {
        // two triangles joined by a bridge 2-3; swapping the bridge with a
        // triangle edge can split off a triangle
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let out = apply_double_edge_swap(&g, (0, 1), (5, 4)).unwrap();
        assert!(out.accepted);
        let c6 = cycle(6);
        let out = apply_double_edge_swap(&c6, (0, 1), (4, 3)).unwrap();
        assert!(!out.accepted, "0-4 and 1-3 close two cycles");
    }

    #[test]
    fn reversibility_of_single_edge_moves() {
        let mut rng = RandomSource::seed_from_u64(21);
        let mut g = random_connected_nm(8, 11, 100, &mut rng).unwrap();
        let mut checked = 0;
        for _ in 0..500 {
            let e = g.edges()[rng.gen_range(0..g.m())];
            let f = loop {
                let (a, b) = (rng.gen_range(0..8), rng.gen_range(0..8));
                if a != b && !g.has_edge(a, b) {
                    break (a.min(b), a.max(b));
                }
            };
            let out = apply_single_edge_swap(&g, e, f).unwrap();
            if out.accepted {
                let back = apply_single_edge_swap(&out.graph, f, e).unwrap();
                assert!(back.accepted);
                assert_eq!(back.graph, g);
                g = out.graph;
                checked += 1;
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn fixed_point_chains() {
        let run = single_edge_chain(4, 6, &ChainConfig::new(1, 5)).unwrap();
        assert!(run.graphs.iter().all(|g| *g == complete(4)));
        assert_eq!(run.summary.accepted, 0);

        let d = DegreeSequence::new(vec![2; 5]).unwrap();
        let run = double_edge_chain(&d, &ChainConfig::new(2, 20)).unwrap();
        assert!(run
            .graphs
            .iter()
            .all(|g| g.unique_cycle_length() == Some(5)));
    }

    #[test]
    fn chains_conserve_invariants() {
        let run = single_edge_chain(9, 8, &ChainConfig::new(3, 50)).unwrap();
        assert_eq!(run.summary.subsample, 11);
        assert_eq!(run.summary.burn_in, 10 * 9 * 8);
        assert_eq!(run.summary.proposals, 720 + 550);
        for g in &run.graphs {
            assert!(g.is_connected());
            assert_eq!(g.m(), 8);
        }
        let d = DegreeSequence::new(vec![3, 3, 2, 2, 2, 2, 1, 1]).unwrap();
        let run = double_edge_chain(&d, &ChainConfig::new(4, 50)).unwrap();
        assert_eq!(run.summary.subsample, 5);
        for g in &run.graphs {
            assert!(g.is_connected());
            assert_eq!(g.degrees(), d.as_slice());
        }
    }

    #[test]
    fn chain_errors() {
        assert!(single_edge_chain(5, 3, &ChainConfig::new(0, 1)).is_err());
        assert!(single_edge_chain(5, 5, &ChainConfig::new(0, 0)).is_err());
        assert!(single_edge_chain(5, 5, &ChainConfig::new(0, 1).with_subsample(0)).is_err());
        let matching = DegreeSequence::new(vec![1; 4]).unwrap();
        assert_eq!(
            double_edge_chain(&matching, &ChainConfig::new(0, 1)).unwrap_err(),
            Error::NoConnectedRealization
        );
        let bad = DegreeSequence::new(vec![3, 3, 3, 1]).unwrap();
        assert_eq!(
            double_edge_chain(&bad, &ChainConfig::new(0, 1)).unwrap_err(),
            Error::NotGraphical
        );
    }

    #[test]
    fn deterministic_under_seed() {
        let a = single_edge_chain(8, 12, &ChainConfig::new(77, 20)).unwrap();
        let b = single_edge_chain(8, 12, &ChainConfig::new(77, 20)).unwrap();
        assert_eq!(a.graphs, b.graphs);
        let c = single_edge_chain(8, 12, &ChainConfig::new(78, 20)).unwrap();
        assert_ne!(a.graphs, c.graphs);
    }

    #[test]
    fn step_functions_preserve_state_space() {
        let mut rng = RandomSource::seed_from_u64(8);
        let mut g = cycle(7);
        for _ in 0..200 {
            g = double_edge_swap_step(&g, &mut rng);
            assert!(g.is_connected());
            assert_eq!(g.degrees(), vec![2; 7]);
        }
        let mut g = path(6);
        for _ in 0..200 {
            g = single_edge_swap_step(&g, &mut rng);
            assert!(g.is_connected());
            assert_eq!(g.m(), 6);
        }
    }
}
