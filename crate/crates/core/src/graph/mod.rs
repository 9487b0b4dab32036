//! Simple undirected graphs and the structural operations built on them.

mod bipartition;
mod clustering;
mod construct;
mod degree;
mod edgelist;
mod graph6;

pub use bipartition::Bipartition;
pub use clustering::{average_local_clustering, local_clustering};
pub(crate) use construct::unicyclic_core_size as construct_core_size;
pub use construct::{complete, cycle, path, star, unicyclic_construct, wedge, wedge_at};
pub use degree::{
    connected_realization, erdos_gallai_graphical, has_connected_realization, havel_hakimi,
    DegreeSequence,
};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{graph6_decode, graph6_encode};

use crate::error::{Error, Result};

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Edges are stored normalized (`u < v`) and sorted; neighbor lists are sorted
/// as well, so two graphs with the same edge set compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, dropping duplicate edges (in either orientation).
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::invalid("a graph needs at least one vertex"));
        }
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(Self::from_sorted_unchecked(n, normalized))
    }

    /// `edges` must be normalized, sorted, deduplicated and in range.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list, each edge as `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Number of vertex pairs that are not edges.
    pub fn non_edge_count(&self) -> usize {
        self.n * (self.n - 1) / 2 - self.m()
    }

    /// True iff every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            label[start] = id;
            let mut members = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Spanning subgraph on the same vertices keeping the edges that cross `(A, V \ A)`.
    pub fn induced_bipartite_subgraph(&self, part: &Bipartition) -> Graph {
        assert_eq!(
            part.n(),
            self.n,
            "bipartition is over a different vertex count"
        );
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| part.contains(u) != part.contains(v))
            .collect();
        Graph::from_sorted_unchecked(self.n, edges)
    }

    /// Subgraph induced on `vertices`, relabeled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                let (pu, pv) = (position[u], position[v]);
                (pu != usize::MAX && pv != usize::MAX).then(|| (pu.min(pv), pu.max(pv)))
            })
            .collect();
        edges.sort_unstable();
        Graph::from_sorted_unchecked(vertices.len().max(1), edges)
    }

    /// Whether the subgraph induced on `vertices` is connected. An empty set counts as disconnected.
    pub fn is_induced_connected(&self, vertices: &[usize]) -> bool {
        !vertices.is_empty() && self.induced_subgraph(vertices).is_connected()
    }

    /// Length of the unique cycle when the graph is connected with exactly `n` edges.
    ///
    /// Found by repeatedly stripping degree-1 vertices; whatever survives is the cycle.
    pub fn unique_cycle_length(&self) -> Option<usize> {
        if self.m() != self.n || !self.is_connected() {
            return None;
        }
        let mut degree = self.degrees();
        let mut removed = vec![false; self.n];
        let mut leaves: Vec<usize> = (0..self.n).filter(|&v| degree[v] == 1).collect();
        let mut left = self.n;
        while let Some(v) = leaves.pop() {
            removed[v] = true;
            left -= 1;
            for &w in &self.adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        leaves.push(w);
                    }
                }
            }
        }
        Some(left)
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Graph::from_sorted_unchecked(self.n, edges)
    }
}
