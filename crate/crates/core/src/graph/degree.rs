use rand::seq::SliceRandom;
use rand::Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Degree sequence sorted non-increasingly; vertex `i` of any realization has degree `d[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts `degrees` non-increasingly.
    pub fn new(mut degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::invalid("degree sequence is empty"));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence(degrees))
    }

    /// Degrees of `g` in vertex order; fails unless they are already non-increasing.
    pub fn of_graph(g: &Graph) -> Result<Self> {
        let d = g.degrees();
        if d.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(
                "graph degrees are not non-increasing in vertex order",
            ));
        }
        Ok(DegreeSequence(d))
    }

    /// Parses a comma-separated list such as `3,3,2,2,1,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let values = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::invalid(format!("bad degree {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Erdős–Gallai test: even sum and, for every `k`,
/// `sum_{i<k} d_i <= k(k-1) + sum_{i>=k} min(d_i, k)`.
pub fn erdos_gallai_graphical(d: &DegreeSequence) -> bool {
    let d = d.as_slice();
    let n = d.len();
    if d.iter().sum::<usize>() % 2 == 1 || d[0] > n - 1 {
        return false;
    }
    let mut prefix = 0;
    for k in 1..=n {
        prefix += d[k - 1];
        let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

/// Whether some connected simple graph realizes `d`.
pub fn has_connected_realization(d: &DegreeSequence) -> bool {
    let n = d.len();
    if n == 1 {
        return d.as_slice()[0] == 0;
    }
    erdos_gallai_graphical(d) && d.as_slice().iter().all(|&x| x >= 1) && d.sum() >= 2 * (n - 1)
}

/// Havel–Hakimi realization: repeatedly joins the vertex of largest residual
/// degree to the next-largest ones, breaking ties at random.
///
/// When the result is disconnected but a connected realization exists,
/// components are merged with degree-preserving double-edge swaps, so the
/// output is connected whenever that is possible.
pub fn havel_hakimi<R: Rng + ?Sized>(d: &DegreeSequence, rng: &mut R) -> Result<Graph> {
    if !erdos_gallai_graphical(d) {
        return Err(Error::NotGraphical);
    }
    let n = d.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut residual = d.as_slice().to_vec();
    let mut edges = Vec::with_capacity(d.sum() / 2);
    loop {
        // stable sort keeps the random tie order
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]));
        let top = order[0];
        let want = residual[top];
        if want == 0 {
            break;
        }
        if want >= n {
            return Err(Error::NotGraphical);
        }
        residual[top] = 0;
        for &w in &order[1..=want] {
            if residual[w] == 0 {
                return Err(Error::NotGraphical);
            }
            residual[w] -= 1;
            edges.push((top.min(w), top.max(w)));
        }
    }
    let g = Graph::from_edges(n, edges)?;
    if !g.is_connected() && has_connected_realization(d) {
        Ok(connect_components(g))
    } else {
        Ok(g)
    }
}

/// [`havel_hakimi`], failing with [`Error::NoConnectedRealization`] when no
/// connected realization exists.
pub fn connected_realization<R: Rng + ?Sized>(d: &DegreeSequence, rng: &mut R) -> Result<Graph> {
    let g = havel_hakimi(d, rng)?;
    if g.is_connected() {
        Ok(g)
    } else {
        Err(Error::NoConnectedRealization)
    }
}

/// Merges components pairwise. A component with a cycle gives up a non-bridge
/// edge `uv`; any edge `xy` of another component is swapped with it for `ux, vy`.
fn connect_components(mut g: Graph) -> Graph {
    loop {
        let components = g.components();
        if components.len() == 1 {
            return g;
        }
        let mut component_of = vec![0; g.n()];
        for (c, members) in components.iter().enumerate() {
            for &v in members {
                component_of[v] = c;
            }
        }
        let (cyclic, spare) = components
            .iter()
            .enumerate()
            .find_map(|(c, members)| non_tree_edge(&g, members).map(|e| (c, e)))
            .expect("m >= n - 1 with several components forces a cycle");
        let (u, v) = spare;
        let &(x, y) = g
            .edges()
            .iter()
            .find(|&&(a, _)| component_of[a] != cyclic)
            .expect("every vertex has degree >= 1");
        let edges = g
            .edges()
            .iter()
            .copied()
            .filter(|&e| e != (u, v) && e != (x, y))
            .chain([(u.min(x), u.max(x)), (v.min(y), v.max(y))]);
        g = Graph::from_edges(g.n(), edges).expect("swap keeps the graph simple");
    }
}

/// An edge of the component outside a DFS spanning tree, if any.
fn non_tree_edge(g: &Graph, members: &[usize]) -> Option<(usize, usize)> {
    let root = members[0];
    let mut parent = vec![usize::MAX; g.n()];
    parent[root] = root;
    let mut stack = vec![root];
    let mut tree = std::collections::HashSet::new();
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                tree.insert((u.min(w), u.max(w)));
                stack.push(w);
            }
        }
    }
    g.edges()
        .iter()
        .copied()
        .find(|e| parent[e.0] != usize::MAX && !tree.contains(e))
}
