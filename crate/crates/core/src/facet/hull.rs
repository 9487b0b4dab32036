//! Brute-force exact facet count from the vertex description of `P_G`.
//!
//! `P_G` lives in the hyperplane `sum x = 0`; dropping the last coordinate
//! gives an `(n-1)`-dimensional chart in which it is full-dimensional and
//! contains the origin in its interior. Every facet therefore has a unique
//! normal `a` with facet hyperplane `a . x = 1`. The oracle tries every set of
//! `n - 1` linearly independent vertices, solves for `a`, and keeps it when all
//! vertices satisfy `a . x <= 1`. Distinct normals are distinct facets.
//!
//! Nothing here knows about labelings or tight subgraphs; the oracle is only
//! meant for small graphs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::ExactScalar;
use crate::Rational;

pub const DEFAULT_GUARD: usize = 8;

/// The vertex `e_plus - e_minus` of `P_G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HullPoint {
    pub n: usize,
    pub plus: usize,
    pub minus: usize,
}

impl HullPoint {
    pub fn coordinates(&self) -> Vec<i64> {
        let mut x = vec![0; self.n];
        x[self.plus] = 1;
        x[self.minus] = -1;
        x
    }

    pub fn negated(&self) -> Self {
        HullPoint {
            n: self.n,
            plus: self.minus,
            minus: self.plus,
        }
    }
}

/// The `2m` points `±(e_u - e_v)`, two per edge.
pub fn hull_vertices(g: &Graph) -> Vec<HullPoint> {
    g.edges()
        .iter()
        .flat_map(|&(u, v)| {
            let p = HullPoint {
                n: g.n(),
                plus: u,
                minus: v,
            };
            [p, p.negated()]
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct HullOracle {
    guard: Option<usize>,
}

impl Default for HullOracle {
    fn default() -> Self {
        HullOracle {
            guard: Some(DEFAULT_GUARD),
        }
    }
}

impl HullOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_guard(guard: usize) -> Self {
        HullOracle { guard: Some(guard) }
    }

    /// No vertex-count limit.
    pub fn unguarded() -> Self {
        HullOracle { guard: None }
    }

    pub fn facet_count(&self, g: &Graph) -> Result<usize> {
        Ok(self.facet_normals::<Rational>(g)?.len())
    }

    /// Facet normals in the chart without the last coordinate, each scaled so
    /// the facet is `a . x = 1`.
    pub fn facet_normals<T: ExactScalar>(&self, g: &Graph) -> Result<BTreeSet<Vec<T>>> {
        let n = g.n();
        if let Some(guard) = self.guard {
            if n > guard {
                return Err(Error::OracleRefused { n, guard });
            }
        }
        if n < 2 {
            return Err(Error::invalid(
                "the hull oracle needs at least two vertices",
            ));
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let points = hull_vertices(g);
        let mut search = Search::<T> {
            dim: n - 1,
            chart: points.iter().map(|p| chart_vector(p)).collect(),
            points,
            chosen: Vec::new(),
            rows: Vec::new(),
            normals: BTreeSet::new(),
        };
        search.extend(0);
        Ok(search.normals)
    }
}

/// Facet count of `P_G` by the default-guarded oracle.
pub fn facet_count_hull(g: &Graph) -> Result<usize> {
    HullOracle::default().facet_count(g)
}

fn chart_vector<T: ExactScalar>(p: &HullPoint) -> Vec<T> {
    let mut x = vec![T::zero(); p.n - 1];
    if p.plus < p.n - 1 {
        x[p.plus] = T::one();
    }
    if p.minus < p.n - 1 {
        x[p.minus] = -T::one();
    }
    x
}

struct Search<T> {
    dim: usize,
    points: Vec<HullPoint>,
    chart: Vec<Vec<T>>,
    chosen: Vec<usize>,
    /// Echelon rows `[coefficients | rhs]` with their pivot columns; row `k`
    /// vanishes on the pivots of rows `0..k`.
    rows: Vec<(usize, Vec<T>)>,
    normals: BTreeSet<Vec<T>>,
}

impl<T: ExactScalar> Search<T> {
    fn extend(&mut self, start: usize) {
        if self.rows.len() == self.dim {
            self.accept();
            return;
        }
        let needed = self.dim - self.rows.len();
        for idx in start..=self.points.len() - needed {
            // a point and its negative cannot both lie on a.x = 1
            if self.chosen.iter().any(|&c| c ^ 1 == idx) {
                continue;
            }
            let mut row = self.chart[idx].clone();
            row.push(T::one());
            for (pivot, basis) in &self.rows {
                if !row[*pivot].is_zero() {
                    let factor = row[*pivot].clone() / basis[*pivot].clone();
                    for (x, b) in row.iter_mut().zip(basis) {
                        if !b.is_zero() {
                            *x = x.clone() - factor.clone() * b.clone();
                        }
                    }
                }
            }
            let Some(pivot) = row[..self.dim].iter().position(|x| !x.is_zero()) else {
                continue;
            };
            self.rows.push((pivot, row));
            self.chosen.push(idx);
            self.extend(idx + 1);
            self.chosen.pop();
            self.rows.pop();
        }
    }

    fn accept(&mut self) {
        let mut a = vec![T::zero(); self.dim];
        for (pivot, row) in self.rows.iter().rev() {
            let mut rhs = row[self.dim].clone();
            for (j, coeff) in row[..self.dim].iter().enumerate() {
                if j != *pivot && !coeff.is_zero() {
                    rhs = rhs - coeff.clone() * a[j].clone();
                }
            }
            a[*pivot] = rhs / row[*pivot].clone();
        }
        let value = |i: usize| {
            if i < self.dim {
                a[i].clone()
            } else {
                T::zero()
            }
        };
        let supporting = self
            .points
            .iter()
            .all(|p| value(p.plus) - value(p.minus) <= T::one());
        if supporting {
            self.normals.insert(a);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};
    use crate::BigRational;

    #[test]
    fn vertices() {
        let pts = hull_vertices(&complete(2));
        assert_eq!(pts[0].coordinates(), vec![1, -1]);
        assert_eq!(pts[1].coordinates(), vec![-1, 1]);
        assert_eq!(hull_vertices(&cycle(3)).len(), 6);
        let p = hull_vertices(&path(2));
        assert_eq!(p.len(), 4);
        assert!(p.iter().all(|x| x.coordinates().iter().sum::<i64>() == 0));
    }

    #[test]
    fn small_counts() {
        assert_eq!(facet_count_hull(&complete(2)).unwrap(), 2);
        assert_eq!(facet_count_hull(&cycle(3)).unwrap(), 6);
        assert_eq!(facet_count_hull(&path(3)).unwrap(), 8);
        assert_eq!(facet_count_hull(&complete(4)).unwrap(), 14);
    }

    #[test]
    fn triangle_normals_are_the_hexagon() {
        let normals: BTreeSet<Vec<Rational>> = HullOracle::new().facet_normals(&cycle(3)).unwrap();
        let ints: BTreeSet<Vec<i64>> = normals
            .iter()
            .map(|a| a.iter().map(|x| x.to_integer()).collect())
            .collect();
        let expected: BTreeSet<Vec<i64>> = [[1, 0], [0, 1], [1, 1], [-1, 0], [0, -1], [-1, -1]]
            .iter()
            .map(|v| v.to_vec())
            .collect();
        assert_eq!(ints, expected);
    }

    #[test]
    fn big_rationals_agree() {
        let g = crate::graph::wedge(&cycle(3), &path(2));
        let small = HullOracle::new()
            .facet_normals::<Rational>(&g)
            .unwrap()
            .len();
        let big = HullOracle::new()
            .facet_normals::<BigRational>(&g)
            .unwrap()
            .len();
        assert_eq!(small, big);
    }

    #[test]
    fn guard_and_preconditions() {
        assert_eq!(
            facet_count_hull(&cycle(9)),
            Err(Error::OracleRefused { n: 9, guard: 8 })
        );
        assert!(HullOracle::unguarded().facet_count(&path(8)).is_ok());
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(facet_count_hull(&two), Err(Error::Disconnected));
    }
}
