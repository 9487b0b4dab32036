//! Facets of the symmetric edge polytope `P_G`.
//!
//! A labeling `f: V -> Z` defines a facet iff every edge changes `f` by at
//! most one and the tight edges (`|f(u) - f(v)| = 1`) form a connected
//! spanning subgraph. Labelings that differ by a constant give the same facet,
//! so they are stored with `f[0] = 0`. The tight subgraph of such a labeling is
//! a *facet subgraph*: a connected spanning `B_A` for the bipartition into
//! even and odd labels.
//!
//! [`hull`] recomputes facet counts from the vertex description alone and
//! serves as an oracle for the enumerator.

mod enumerate;
pub mod hull;

pub use enumerate::{
    enumerate_facet_functions, facet_count, group_by_facet_subgraph, FacetEnumerator,
    DEFAULT_NODE_BUDGET,
};
pub use hull::{facet_count_hull, hull_vertices, HullOracle, HullPoint};

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};

/// Canonical facet-defining labeling (`labels[0] == 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetFunction(Vec<i64>);

impl FacetFunction {
    /// Shifts `labels` so that vertex 0 has label 0. No facet check is made.
    pub fn canonical(labels: &[i64]) -> Self {
        let base = labels.first().copied().unwrap_or(0);
        FacetFunction(labels.iter().map(|&x| x - base).collect())
    }

    pub fn labels(&self) -> &[i64] {
        &self.0
    }

    pub fn negated(&self) -> Self {
        FacetFunction(self.0.iter().map(|&x| -x).collect())
    }

    /// Takes exactly two consecutive values, i.e. is a `{0,1}` labeling up to a shift.
    pub fn is_zero_one(&self) -> bool {
        let min = self.0.iter().min().copied().unwrap_or(0);
        let max = self.0.iter().max().copied().unwrap_or(0);
        max - min == 1
    }

    /// Facet normal in the chart that drops the last coordinate.
    pub fn chart_normal(&self) -> Vec<i64> {
        let last = *self.0.last().expect("nonempty labeling");
        self.0[..self.0.len() - 1]
            .iter()
            .map(|&x| x - last)
            .collect()
    }
}

impl std::fmt::Display for FacetFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Tight edge set of a facet labeling with its 2-coloring.
///
/// `shore` is the color class containing vertex 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetSubgraph {
    edges: Vec<(usize, usize)>,
    shore: Bipartition,
}

impl FacetSubgraph {
    /// `B_A` when it is connected and spanning; `None` otherwise.
    pub fn from_bipartition(g: &Graph, part: &Bipartition) -> Option<Self> {
        let b = g.induced_bipartite_subgraph(part);
        if !b.is_connected() {
            return None;
        }
        let shore = if part.contains(0) {
            part.clone()
        } else {
            part.complement()
        };
        Some(FacetSubgraph {
            edges: b.edges().to_vec(),
            shore,
        })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn shore(&self) -> &Bipartition {
        &self.shore
    }

    pub fn as_graph(&self) -> Graph {
        Graph::from_sorted_unchecked(self.shore.n(), self.edges.clone())
    }
}

/// Checks both facet conditions for `labels` on `g`.
pub fn is_facet_defining(g: &Graph, labels: &[i64]) -> Result<bool> {
    if labels.len() != g.n() {
        return Err(Error::invalid(format!(
            "labeling has {} entries for a graph on {} vertices",
            labels.len(),
            g.n()
        )));
    }
    let mut tight = Vec::new();
    for &(u, v) in g.edges() {
        match (labels[u] - labels[v]).abs() {
            0 => {}
            1 => tight.push((u, v)),
            _ => return Ok(false),
        }
    }
    Ok(Graph::from_sorted_unchecked(g.n(), tight).is_connected())
}

/// The tight subgraph `G_f` of a facet-defining labeling.
pub fn facet_subgraph(g: &Graph, f: &FacetFunction) -> Result<FacetSubgraph> {
    if !is_facet_defining(g, f.labels())? {
        return Err(Error::invalid(format!("{f} is not facet-defining")));
    }
    let labels = f.labels();
    let edges = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| labels[u] != labels[v])
        .collect();
    let shore = Bipartition::from_members(
        g.n(),
        (0..g.n()).filter(|&v| (labels[v] - labels[0]).rem_euclid(2) == 0),
    );
    Ok(FacetSubgraph { edges, shore })
}

/// Whether `B_A` is a facet subgraph, i.e. connected and spanning.
pub fn is_facet_subgraph(g: &Graph, part: &Bipartition) -> Result<bool> {
    if part.n() != g.n() || !part.is_proper() {
        return Err(Error::invalid(
            "need a nonempty proper vertex subset of the graph",
        ));
    }
    Ok(g.induced_bipartite_subgraph(part).is_connected())
}

/// `N(K_n) = 2^n - 2`.
pub fn facet_count_complete(n: usize) -> Result<u128> {
    if !(2..=127).contains(&n) {
        return Err(Error::invalid(format!(
            "facet_count_complete needs 2 <= n <= 127, got {n}"
        )));
    }
    Ok((1u128 << n) - 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn facet_defining_examples() {
        assert!(is_facet_defining(&complete(3), &[0, 1, 0]).unwrap());
        assert!(!is_facet_defining(&path(2), &[0, 0, 0]).unwrap());
        assert!(!is_facet_defining(&path(2), &[0, 2, 1]).unwrap());
        assert!(is_facet_defining(&path(2), &[0, 1]).is_err());
    }

    #[test]
    fn facet_subgraph_examples() {
        let k3 = complete(3);
        let sub = facet_subgraph(&k3, &FacetFunction::canonical(&[0, 1, 0])).unwrap();
        assert_eq!(sub.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(sub.shore().members(), vec![0, 2]);

        let k2 = complete(2);
        let sub = facet_subgraph(&k2, &FacetFunction::canonical(&[0, 1])).unwrap();
        assert_eq!(sub.edges(), &[(0, 1)]);

        let c4 = cycle(4);
        let sub = facet_subgraph(&c4, &FacetFunction::canonical(&[0, 1, 0, 1])).unwrap();
        assert_eq!(sub.edges(), c4.edges());
        assert_eq!(sub.shore().members(), vec![0, 2]);
        assert_eq!(sub.shore().complement().members(), vec![1, 3]);

        assert!(facet_subgraph(&c4, &FacetFunction::canonical(&[0, 0, 0, 0])).is_err());
    }

    #[test]
    fn facet_subgraph_matches_bipartition() {
        let c4 = cycle(4);
        let sub = facet_subgraph(&c4, &FacetFunction::canonical(&[0, 1, 0, 1])).unwrap();
        let via_part =
            FacetSubgraph::from_bipartition(&c4, &Bipartition::from_members(4, [1, 3])).unwrap();
        assert_eq!(sub, via_part);
    }

    #[test]
    fn is_facet_subgraph_examples() {
        for n in 2..7 {
            let kn = complete(n);
            for mask in 1..(1u32 << n) - 1 {
                let part = Bipartition::from_members(n, (0..n).filter(|&v| mask >> v & 1 == 1));
                assert!(is_facet_subgraph(&kn, &part).unwrap());
            }
        }
        let c4 = cycle(4);
        assert!(is_facet_subgraph(&c4, &Bipartition::from_members(4, [0, 2])).unwrap());
        assert!(!is_facet_subgraph(&c4, &Bipartition::from_members(4, [0, 1])).unwrap());
        assert!(is_facet_subgraph(&c4, &Bipartition::empty(4)).is_err());
        assert!(is_facet_subgraph(&c4, &Bipartition::from_members(4, 0..4)).is_err());
    }

    #[test]
    fn complete_graph_formula() {
        assert_eq!(facet_count_complete(11).unwrap(), 2046);
        assert_eq!(facet_count_complete(12).unwrap(), 4094);
        assert_eq!(facet_count_complete(2).unwrap(), 2);
        assert!(facet_count_complete(1).is_err());
    }

    #[test]
    fn zero_one_detection() {
        assert!(FacetFunction::canonical(&[0, -1, 0]).is_zero_one());
        assert!(!FacetFunction::canonical(&[0, 1, 2]).is_zero_one());
        assert_eq!(FacetFunction::canonical(&[3, 4, 2]).labels(), &[0, 1, -1]);
    }
}
