//! Depth-first search over facet labelings.
//!
//! Vertices are labeled in BFS order from vertex 0 (fixed at label 0), so
//! every later vertex has an already-labeled neighbor and its label is
//! confined to the intersection of `{f(u) - 1, f(u), f(u) + 1}` over those
//! neighbors. A branch dies as soon as some vertex whose neighborhood is fully
//! labeled has no tight edge; survivors are kept iff their tight edges connect
//! the graph.

use std::collections::{BTreeMap, VecDeque};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use super::{FacetFunction, FacetSubgraph};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};

/// Search nodes (label assignments) allowed before giving up.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000_000;

/// Prefix depth at which the parallel count splits the search tree.
const SPLIT_TARGET: usize = 256;
const FLUSH_EVERY: u64 = 1 << 12;

pub struct FacetEnumerator<'g> {
    g: &'g Graph,
    order: Vec<usize>,
    /// Already-labeled neighbors of `order[t]`.
    earlier: Vec<Vec<usize>>,
    /// Vertices whose closed neighborhood is fully labeled once `order[t]` is.
    closing: Vec<Vec<usize>>,
    budget: u64,
}

impl<'g> FacetEnumerator<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        if g.n() < 2 {
            return Err(Error::invalid(
                "facet enumeration needs at least two vertices",
            ));
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = g.n();
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let mut position = vec![0; n];
        for (t, &v) in order.iter().enumerate() {
            position[v] = t;
        }
        let earlier = order
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| position[u] < position[v])
                    .collect()
            })
            .collect();
        let mut closing = vec![Vec::new(); n];
        for v in 0..n {
            let done = g
                .neighbors(v)
                .iter()
                .map(|&u| position[u])
                .fold(position[v], usize::max);
            closing[done].push(v);
        }
        Ok(FacetEnumerator {
            g,
            order,
            earlier,
            closing,
            budget: DEFAULT_NODE_BUDGET,
        })
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// Number of facets, without materializing the labelings.
    pub fn count(&self) -> Result<u64> {
        let mut count = 0;
        self.walk(|_| count += 1)?;
        Ok(count)
    }

    /// All canonical facet labelings in lexicographic order.
    pub fn list(&self) -> Result<Vec<FacetFunction>> {
        let mut out = Vec::new();
        self.walk(|labels| out.push(FacetFunction(labels.to_vec())))?;
        out.sort_unstable();
        Ok(out)
    }

    /// Same as [`count`](Self::count), with the subtrees below a shallow
    /// prefix searched in parallel.
    pub fn count_parallel(&self) -> Result<u64> {
        let n = self.g.n();
        let mut labels = vec![0i64; n];
        let mut prefixes: Vec<(usize, Vec<i64>)> = vec![(1, labels.clone())];
        let mut expanded = 0u64;
        // breadth-first expansion until there is enough work to spread
        while prefixes.len() < SPLIT_TARGET {
            let Some(depth) = prefixes.iter().map(|p| p.0).min() else {
                break;
            };
            if depth >= n {
                break;
            }
            let mut next = Vec::new();
            for (d, prefix) in prefixes {
                if d != depth {
                    next.push((d, prefix));
                    continue;
                }
                labels.copy_from_slice(&prefix);
                let (lo, hi) = self.window(&labels, d);
                for value in lo..=hi {
                    expanded += 1;
                    labels[self.order[d]] = value;
                    if self.closes_cleanly(&labels, d) {
                        next.push((d + 1, labels.clone()));
                    }
                }
            }
            prefixes = next;
            if expanded > self.budget {
                return Err(Error::BudgetExhausted {
                    budget: self.budget,
                });
            }
        }

        let nodes = AtomicU64::new(expanded);
        let exhausted = AtomicBool::new(false);
        let total: u64 = prefixes
            .into_par_iter()
            .map(|(depth, mut labels)| {
                let mut search = Search::new(self.budget, Some((&nodes, &exhausted)));
                let mut count = 0;
                if depth == n {
                    if self.tight_connected(&labels) {
                        count += 1;
                    }
                } else {
                    self.descend(depth, &mut labels, &mut search, &mut |_| count += 1);
                }
                search.flush();
                count
            })
            .sum();
        if exhausted.load(Ordering::Relaxed) {
            return Err(Error::BudgetExhausted {
                budget: self.budget,
            });
        }
        Ok(total)
    }

    fn walk<F: FnMut(&[i64])>(&self, mut visit: F) -> Result<()> {
        let mut labels = vec![0i64; self.g.n()];
        let mut search = Search::new(self.budget, None);
        if self.closes_cleanly(&labels, 0) {
            self.descend(1, &mut labels, &mut search, &mut visit);
        }
        if search.exhausted {
            return Err(Error::BudgetExhausted {
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn descend<F: FnMut(&[i64])>(
        &self,
        t: usize,
        labels: &mut [i64],
        search: &mut Search,
        visit: &mut F,
    ) {
        if t == self.order.len() {
            if self.tight_connected(labels) {
                visit(labels);
            }
            return;
        }
        let (lo, hi) = self.window(labels, t);
        let v = self.order[t];
        for value in lo..=hi {
            if !search.tick() {
                return;
            }
            labels[v] = value;
            debug_assert!(value.unsigned_abs() as usize <= self.g.n());
            if self.closes_cleanly(labels, t) {
                self.descend(t + 1, labels, search, visit);
            }
        }
    }

    /// Admissible labels for `order[t]` given its labeled neighbors.
    fn window(&self, labels: &[i64], t: usize) -> (i64, i64) {
        let mut lo = i64::MIN;
        let mut hi = i64::MAX;
        for &u in &self.earlier[t] {
            lo = lo.max(labels[u] - 1);
            hi = hi.min(labels[u] + 1);
        }
        (lo, hi)
    }

    /// Every vertex completed at step `t` has a tight incident edge.
    fn closes_cleanly(&self, labels: &[i64], t: usize) -> bool {
        self.closing[t]
            .iter()
            .all(|&v| self.g.neighbors(v).iter().any(|&u| labels[u] != labels[v]))
    }

    fn tight_connected(&self, labels: &[i64]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut merges = 0;
        for &(u, v) in self.g.edges() {
            if labels[u] != labels[v] {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    merges += 1;
                    if merges == n - 1 {
                        return true;
                    }
                }
            }
        }
        false
    }
}

struct Search<'a> {
    nodes: u64,
    unflushed: u64,
    budget: u64,
    shared: Option<(&'a AtomicU64, &'a AtomicBool)>,
    exhausted: bool,
}

impl<'a> Search<'a> {
    fn new(budget: u64, shared: Option<(&'a AtomicU64, &'a AtomicBool)>) -> Self {
        Search {
            nodes: 0,
            unflushed: 0,
            budget,
            shared,
            exhausted: false,
        }
    }

    fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        match self.shared {
            None => {
                if self.nodes > self.budget {
                    self.exhausted = true;
                }
            }
            Some(_) => {
                self.unflushed += 1;
                if self.unflushed >= FLUSH_EVERY {
                    self.flush();
                }
            }
        }
        !self.exhausted
    }

    fn flush(&mut self) {
        if let Some((nodes, flag)) = self.shared {
            let total = nodes.fetch_add(self.unflushed, Ordering::Relaxed) + self.unflushed;
            self.unflushed = 0;
            if total > self.budget || flag.load(Ordering::Relaxed) {
                flag.store(true, Ordering::Relaxed);
                self.exhausted = true;
            }
        }
    }
}

/// All canonical facet labelings of a connected graph, in lexicographic order.
pub fn enumerate_facet_functions(g: &Graph) -> Result<Vec<FacetFunction>> {
    FacetEnumerator::new(g)?.list()
}

/// Number of facets `N(G)` of a connected graph.
pub fn facet_count(g: &Graph) -> Result<u64> {
    FacetEnumerator::new(g)?.count()
}

/// Facet labelings grouped by their tight subgraph.
pub fn group_by_facet_subgraph(g: &Graph) -> Result<BTreeMap<FacetSubgraph, Vec<FacetFunction>>> {
    let mut groups: BTreeMap<FacetSubgraph, Vec<FacetFunction>> = BTreeMap::new();
    for f in enumerate_facet_functions(g)? {
        let labels = f.labels();
        let shore =
            Bipartition::from_members(g.n(), (0..g.n()).filter(|&v| labels[v].rem_euclid(2) == 0));
        let edges = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| labels[u] != labels[v])
            .collect();
        groups
            .entry(FacetSubgraph { edges, shore })
            .or_default()
            .push(f);
    }
    Ok(groups)
}
