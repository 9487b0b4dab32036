//! Seeded random-graph generation.
//!
//! Everything random takes an explicit generator; [`RandomSource`] is the one
//! used throughout so that a seed pins an entire run.

mod chains;
mod dyngraph;
mod gnp;
mod rng;

pub use chains::{
    apply_double_edge_swap, apply_single_edge_swap, double_edge_chain, double_edge_swap_step,
    single_edge_chain, single_edge_swap_step, ChainConfig, ChainKind, ChainRun, ChainSummary,
    DoubleEdgeChain, SingleEdgeChain, SwapOutcome,
};
pub use gnp::{random_connected_nm, random_tree, sample_gnp, sample_gnp_connected};
pub use rng::RandomSource;
