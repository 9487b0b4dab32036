//! Facet counts of unicyclic graphs as the cycle length varies.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::facet::facet_count;
use crate::graph::{unicyclic_construct, DegreeSequence, Graph};
use crate::samplers::{DoubleEdgeChain, RandomSource};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleLengthRow {
    pub cycle_len: usize,
    pub facets: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleLengthTable {
    /// Number of degrees `>= 2` (equal to `n` for 2-regular sequences).
    pub k: usize,
    /// Largest odd cycle length `<= k`, or `n` in the 2-regular case.
    pub predicted: usize,
    pub rows: Vec<CycleLengthRow>,
}

impl CycleLengthTable {
    /// Cycle length with the most facets; the smallest such length on ties.
    pub fn argmax(&self) -> usize {
        let best = self
            .rows
            .iter()
            .map(|r| r.facets)
            .max()
            .expect("at least one row");
        self.rows
            .iter()
            .find(|r| r.facets == best)
            .expect("max exists")
            .cycle_len
    }

    /// The maximizer is unique and equals [`predicted`](Self::predicted).
    pub fn matches_prediction(&self) -> bool {
        let best = self
            .rows
            .iter()
            .map(|r| r.facets)
            .max()
            .expect("at least one row");
        self.rows.iter().filter(|r| r.facets == best).count() == 1
            && self.argmax() == self.predicted
    }
}

/// Valid cycle lengths for a unicyclic degree sequence and the core size `k`.
pub fn cycle_lengths(d: &DegreeSequence) -> Result<(usize, Vec<usize>)> {
    let n = d.len();
    if d.sum() != 2 * n {
        return Err(Error::invalid("unicyclic degree sequences sum to 2n"));
    }
    if d.as_slice().iter().all(|&x| x == 2) {
        return Ok((n, vec![n]));
    }
    let k = crate::graph::construct_core_size(d)?;
    Ok((k, (3..=k).collect()))
}

/// `N` of the constructed unicyclic graph for every attainable cycle length.
pub fn cycle_length_scan(d: &DegreeSequence) -> Result<CycleLengthTable> {
    let (k, lengths) = cycle_lengths(d)?;
    let two_regular = lengths == [d.len()] && d.as_slice().iter().all(|&x| x == 2);
    let predicted = if two_regular {
        d.len()
    } else if k % 2 == 1 {
        k
    } else {
        k - 1
    };
    let rows = lengths
        .into_iter()
        .map(|m| {
            let g = unicyclic_construct(d, m)?;
            Ok(CycleLengthRow {
                cycle_len: m,
                facets: facet_count(&g)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CycleLengthTable { k, predicted, rows })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    pub graphs: Vec<Graph>,
    pub counts: Vec<u64>,
}

impl InvarianceReport {
    /// Fewer than two distinct graphs were found, so there is nothing to compare.
    pub fn vacuous(&self) -> bool {
        self.graphs.len() < 2
    }

    pub fn invariant(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] == w[1])
    }
}

/// Collects up to `variants` distinct connected graphs with degree sequence
/// `d` and unique cycle length `m`, by walking the double-edge chain from the
/// constructed graph, and compares their facet counts.
pub fn facet_count_invariance_check(
    d: &DegreeSequence,
    m: usize,
    variants: usize,
    rng: &mut RandomSource,
) -> Result<InvarianceReport> {
    let start = unicyclic_construct(d, m)?;
    let mut found = BTreeSet::from([start.clone()]);
    let mut chain = DoubleEdgeChain::new(&start, rng.clone())?;
    let budget = 400 * variants.max(1) * d.len();
    for _ in 0..budget {
        if found.len() >= variants {
            break;
        }
        if chain.step() {
            let g = chain.graph();
            if g.unique_cycle_length() == Some(m) {
                found.insert(g);
            }
        }
    }
    *rng = rng.derive(1);
    let graphs: Vec<Graph> = found.into_iter().take(variants.max(1)).collect();
    let counts = graphs.iter().map(facet_count).collect::<Result<Vec<_>>>()?;
    Ok(InvarianceReport { graphs, counts })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn two_regular_single_row() {
        let t = cycle_length_scan(&seq(&[2; 5])).unwrap();
        assert_eq!(
            t.rows,
            vec![CycleLengthRow {
                cycle_len: 5,
                facets: 30
            }]
        );
        assert_eq!(t.argmax(), 5);
    }

    #[test]
    fn triangle_beats_square() {
        let t = cycle_length_scan(&seq(&[3, 3, 2, 2, 1, 1])).unwrap();
        assert_eq!(t.k, 4);
        assert_eq!(t.predicted, 3);
        assert_eq!(t.rows.len(), 2);
        assert_eq!(t.argmax(), 3);
        assert!(t.matches_prediction());
    }

    #[test]
    fn seven_core_peaks_at_seven() {
        // k = 7, one leaf per core vertex would need sum 2n: 7 twos plus extra stubs
        let d = seq(&[3, 3, 3, 2, 2, 2, 2, 1, 1, 1]);
        let t = cycle_length_scan(&d).unwrap();
        assert_eq!(t.k, 7);
        assert_eq!(t.argmax(), 7);
        assert!(t.matches_prediction());
    }

    #[test]
    fn invariance_examples() {
        let mut rng = RandomSource::seed_from_u64(1);
        let r = facet_count_invariance_check(&seq(&[3, 3, 2, 2, 1, 1]), 3, 2, &mut rng).unwrap();
        assert_eq!(r.graphs.len(), 2);
        assert!(r.invariant());

        // labeled 5-cycles other than the start are reachable
        let r = facet_count_invariance_check(&seq(&[2; 5]), 5, 3, &mut rng).unwrap();
        assert_eq!(r.counts, vec![30; 3]);

        let r = facet_count_invariance_check(&seq(&[3, 2, 2, 2, 2, 2, 1]), 4, 5, &mut rng).unwrap();
        assert_eq!(r.graphs.len(), 5);
        assert!(r.invariant());
        assert!(r.graphs.iter().all(|g| g.unique_cycle_length() == Some(4)));
    }

    #[test]
    fn invalid_sequences() {
        assert!(cycle_length_scan(&seq(&[3, 3, 3, 3])).is_err());
        assert!(cycle_length_scan(&seq(&[5, 3, 1, 1, 1, 1])).is_err());
    }
}
