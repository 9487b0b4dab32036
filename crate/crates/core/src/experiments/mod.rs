//! Reproductions of the empirical studies: clustering-versus-facet ensembles,
//! bipartition scans, the Erdős–Rényi threshold trials, the `{0,1}` facet
//! labeling check, and the unicyclic cycle-length scans.

mod ensemble;
mod scan;
mod stats;
mod threshold;
mod unicyclic;
mod zero_one;

pub use ensemble::{
    ensemble_csv, ensemble_metrics, gnp_ensemble, EnsembleRecord, MetricsOptions, CWS_DIGITS,
    ENSEMBLE_HEADER,
};
pub use scan::{
    bipartition_scan, bipartition_scan_with, scan_csv, BipartiteProbe, ScanMode, ScanPoint,
};
pub use stats::{average_ranks, spearman};
pub use threshold::{er_threshold_trial, ThresholdOptions, ThresholdSummary, Witness};
pub use unicyclic::{
    cycle_length_scan, cycle_lengths, facet_count_invariance_check, CycleLengthRow,
    CycleLengthTable, InvarianceReport,
};
pub use zero_one::{zero_one_check, zero_one_check_grouped, ZeroOneReport};

/// Statistical thresholds for the reproduction checks, kept in one place.
///
/// The effects being checked are qualitative; these numbers were fixed from
/// pilot runs and are deliberately loose.
pub mod tolerances {
    /// Share of balanced bipartitions with connected spanning `B_A` at `n = 300, p = 0.6`.
    pub const SUPERCRITICAL_CONNECTED_SHARE: f64 = 0.99;
    /// Share of subcritical trials (`n = 300, p = 0.4`) whose witness disconnects `B_A`.
    pub const SUBCRITICAL_WITNESS_SHARE: f64 = 0.95;
    /// Accepted window for the final scan fraction on 11-regular graphs with 5000 vertices.
    pub const SCAN_FINAL_RANGE: (f64, f64) = (0.98, 1.0);
    /// Share of connected `G(11, 0.45)` samples with at least `N(K_11) = 2046` facets.
    pub const GNP_AT_LEAST_COMPLETE_SHARE: f64 = 0.60;
    /// Lower bound on the Spearman correlation between `C_WS` and `N(G)` for the (11, 25) ensemble.
    pub const CLUSTERING_FACETS_SPEARMAN: f64 = 0.2;
    /// Total-variation bound for the chains against the uniform distribution.
    pub const UNIFORMITY_TV: f64 = 0.05;
}
