//! When both sides of a bipartition induce connected subgraphs, any facet
//! labeling with tight subgraph `B_A` is constant on each side, so exactly the
//! two `{0,1}` indicator labelings remain (or none, if `B_A` is not a facet
//! subgraph).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::facet::{group_by_facet_subgraph, FacetFunction, FacetSubgraph};
use crate::graph::{Bipartition, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroOneReport {
    /// Facet labelings whose tight subgraph is `B_A`.
    pub function_count: usize,
    /// All of them take two consecutive values (false when there are none).
    pub all_01: bool,
    /// `G[A]` and `G[V \ A]` are both connected.
    pub sides_connected: bool,
    /// `B_A` is connected and spanning.
    pub facet_subgraph: bool,
}

impl ZeroOneReport {
    pub fn hypothesis_met(&self) -> bool {
        self.sides_connected && self.facet_subgraph
    }

    /// The claim holds: under the hypothesis there are exactly two labelings, both `{0,1}`.
    pub fn holds(&self) -> bool {
        !self.hypothesis_met() || (self.function_count == 2 && self.all_01)
    }
}

/// Groups the facet labelings of `g` and inspects the group of `B_A`.
pub fn zero_one_check(g: &Graph, part: &Bipartition) -> Result<ZeroOneReport> {
    let groups = group_by_facet_subgraph(g)?;
    zero_one_check_grouped(&groups, g, part)
}

/// As [`zero_one_check`], reusing a precomputed grouping of `g`.
pub fn zero_one_check_grouped(
    groups: &BTreeMap<FacetSubgraph, Vec<FacetFunction>>,
    g: &Graph,
    part: &Bipartition,
) -> Result<ZeroOneReport> {
    if part.n() != g.n() || !part.is_proper() {
        return Err(Error::invalid(
            "need a nonempty proper vertex subset of the graph",
        ));
    }
    let sides_connected =
        g.is_induced_connected(&part.members()) && g.is_induced_connected(&part.non_members());
    let sub = FacetSubgraph::from_bipartition(g, part);
    let functions = sub
        .as_ref()
        .and_then(|s| groups.get(s))
        .map_or(&[][..], Vec::as_slice);
    Ok(ZeroOneReport {
        function_count: functions.len(),
        all_01: !functions.is_empty() && functions.iter().all(FacetFunction::is_zero_one),
        sides_connected,
        facet_subgraph: sub.is_some(),
    })
}
