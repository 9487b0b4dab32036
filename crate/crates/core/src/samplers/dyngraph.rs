//! Mutable working graph for the swap chains.

use crate::graph::Graph;

pub(crate) struct DynGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    stamp: Vec<u32>,
    side: Vec<u8>,
    epoch: u32,
    queues: [Vec<usize>; 2],
}

impl DynGraph {
    pub(crate) fn from_graph(g: &Graph) -> Self {
        let adj = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
        DynGraph {
            n: g.n(),
            edges: g.edges().to_vec(),
            adj,
            stamp: vec![0; g.n()],
            side: vec![0; g.n()],
            epoch: 0,
            queues: [Vec::new(), Vec::new()],
        }
    }

    pub(crate) fn to_graph(&self) -> Graph {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        Graph::from_sorted_unchecked(self.n, edges)
    }

    pub(crate) fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn m(&self) -> usize {
        self.edges.len()
    }

    pub(crate) fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub(crate) fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].contains(&b)
    }

    /// Replaces the edge at `index` by `(u, v)`, which must be a non-edge.
    pub(crate) fn replace(&mut self, index: usize, u: usize, v: usize) {
        let (a, b) = self.edges[index];
        remove_value(&mut self.adj[a], b);
        remove_value(&mut self.adj[b], a);
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edges[index] = (u.min(v), u.max(v));
    }

    /// Whether `a` and `b` lie in one component.
    ///
    /// Two searches grow from `a` and `b`, always expanding the smaller one;
    /// they stop when they touch or when one runs out of vertices.
    pub(crate) fn linked(&mut self, a: usize, b: usize) -> bool {
        if a == b {
            return true;
        }
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        let epoch = self.epoch;
        let mut queues = std::mem::take(&mut self.queues);
        for (s, &start) in [a, b].iter().enumerate() {
            queues[s].clear();
            queues[s].push(start);
            self.stamp[start] = epoch;
            self.side[start] = s as u8;
        }
        let mut heads = [0usize; 2];
        let result = loop {
            let s = if queues[0].len() <= queues[1].len() {
                0
            } else {
                1
            };
            if heads[s] == queues[s].len() {
                break false;
            }
            let u = queues[s][heads[s]];
            heads[s] += 1;
            let mut met = false;
            for &w in &self.adj[u] {
                if self.stamp[w] == epoch {
                    if self.side[w] as usize != s {
                        met = true;
                        break;
                    }
                } else {
                    self.stamp[w] = epoch;
                    self.side[w] = s as u8;
                    queues[s].push(w);
                }
            }
            if met {
                break true;
            }
        };
        self.queues = queues;
        result
    }
}

fn remove_value(list: &mut Vec<usize>, value: usize) {
    let pos = list
        .iter()
        .position(|&x| x == value)
        .expect("edge present in adjacency");
    list.swap_remove(pos);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn linked_matches_components() {
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let mut d = DynGraph::from_graph(&two);
        assert!(d.linked(0, 2));
        assert!(!d.linked(0, 5));
        assert!(d.linked(5, 3));
        let mut p = DynGraph::from_graph(&path(10));
        assert!(p.linked(0, 10));
    }

    #[test]
    fn replace_updates_adjacency() {
        let mut d = DynGraph::from_graph(&cycle(4));
        d.replace(0, 0, 2);
        assert!(d.has_edge(0, 2) && !d.has_edge(0, 1));
        assert_eq!(
            d.to_graph(),
            Graph::from_edges(4, [(0, 2), (1, 2), (2, 3), (0, 3)]).unwrap()
        );
    }
}
