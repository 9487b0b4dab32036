//! Exact facet enumeration for symmetric edge polytopes of simple graphs.
//!
//! The symmetric edge polytope of a graph `G` on vertices `0..n` is the convex
//! hull of the points `±(e_i - e_j)` over the edges `ij` of `G`. Its facets are
//! in bijection with integer vertex labelings whose edge differences are at most
//! one and whose tight edges form a connected spanning subgraph; [`facet`]
//! enumerates those labelings directly and cross-checks them against a
//! brute-force exact hull computation.
//!
//! Around that core sit random-graph samplers ([`samplers`]) and the
//! experiment harness ([`experiments`]) used to study how facet counts relate
//! to clustering, bipartitions and cycle structure.

pub mod error;
pub mod experiments;
pub mod facet;
pub mod graph;
pub mod samplers;
pub mod scalar;

pub use error::{Error, Result};
pub use facet::{FacetFunction, FacetSubgraph, HullPoint};
pub use graph::{Bipartition, DegreeSequence, Graph};
pub use samplers::{ChainConfig, RandomSource};
pub use scalar::{ExactScalar, Scalar};

/// Machine-width exact rational; enough for hull normals of desk-scale graphs.
pub type Rational = num_rational::Ratio<i64>;
/// Arbitrary-precision rational, used where denominators can accumulate.
pub type BigRational = num_rational::BigRational;
