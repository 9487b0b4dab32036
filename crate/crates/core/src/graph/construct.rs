//! Named graph families and the cycle-length-prescribed unicyclic construction.

use super::{DegreeSequence, Graph};
use crate::error::{Error, Result};

/// Complete graph `K_n`; panics for `n == 0`.
pub fn complete(n: usize) -> Graph {
    assert!(n >= 1, "K_0 is not a graph here");
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_sorted_unchecked(n, edges)
}

/// Cycle with `m >= 3` edges on vertices `0..m`, in order around the cycle.
pub fn cycle(m: usize) -> Graph {
    assert!(m >= 3, "a simple cycle needs at least 3 edges");
    Graph::from_edges(m, (0..m).map(|i| (i, (i + 1) % m))).expect("cycle is simple")
}

/// Path with `m` edges on vertices `0..=m`.
pub fn path(m: usize) -> Graph {
    Graph::from_edges(m + 1, (0..m).map(|i| (i, i + 1))).expect("path is simple")
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
}

/// `G ∨ H` glued at vertex 0 of both.
pub fn wedge(g: &Graph, h: &Graph) -> Graph {
    wedge_at(g, h, 0)
}

/// `G ∨ H` identifying vertex `joint` of `g` with vertex 0 of `h`.
///
/// Vertices of `g` keep their labels; vertex `i >= 1` of `h` becomes `g.n() + i - 1`.
pub fn wedge_at(g: &Graph, h: &Graph, joint: usize) -> Graph {
    assert!(joint < g.n(), "joint vertex {joint} outside G");
    let shift = |v: usize| if v == 0 { joint } else { g.n() + v - 1 };
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(u, v)| (shift(u), shift(v))));
    Graph::from_edges(g.n() + h.n() - 1, edges).expect("wedge of simple graphs is simple")
}

/// Connected graph with `n` vertices, `n` edges, degree sequence `d`, and a
/// unique cycle of length `cycle_len`.
///
/// With `k` the number of entries `>= 2`: a cycle on `0..cycle_len`, a path on
/// `cycle_len..k` joined to vertex 0 by a bridge, then the leaves `k..n`
/// attached in order to the remaining free stubs of `0..k`, lowest vertex
/// first. A 2-regular `d` admits only `cycle_len == n`.
pub fn unicyclic_construct(d: &DegreeSequence, cycle_len: usize) -> Result<Graph> {
    let degrees = d.as_slice();
    let n = degrees.len();
    if d.sum() != 2 * n {
        return Err(Error::invalid(format!(
            "degree sum {} differs from 2n = {}",
            d.sum(),
            2 * n
        )));
    }
    if degrees.contains(&0) {
        return Err(Error::invalid("unicyclic graphs have no isolated vertices"));
    }
    if degrees.iter().all(|&x| x == 2) {
        if cycle_len != n {
            return Err(Error::invalid(format!(
                "a 2-regular sequence on {n} vertices only admits the {n}-cycle"
            )));
        }
        return Ok(cycle(n));
    }
    let k = unicyclic_core_size(d)?;
    if !(3..=k).contains(&cycle_len) {
        return Err(Error::invalid(format!(
            "cycle length {cycle_len} outside [3, {k}]"
        )));
    }

    let mut edges: Vec<(usize, usize)> = (0..cycle_len).map(|i| (i, (i + 1) % cycle_len)).collect();
    if cycle_len < k {
        edges.extend((cycle_len..k - 1).map(|i| (i, i + 1)));
        edges.push((0, cycle_len));
    }
    let mut free: Vec<usize> = degrees.to_vec();
    for &(u, v) in &edges {
        free[u] -= 1;
        free[v] -= 1;
    }
    let mut leaves = k..n;
    for (v, &stubs) in free.iter().enumerate().take(k) {
        for _ in 0..stubs {
            let leaf = leaves.next().expect("stub count equals leaf count");
            edges.push((v, leaf));
        }
    }
    debug_assert!(leaves.next().is_none());
    Graph::from_edges(n, edges)
}

/// Number of entries `>= 2` for a non-2-regular unicyclic sequence.
pub(crate) fn unicyclic_core_size(d: &DegreeSequence) -> Result<usize> {
    let degrees = d.as_slice();
    let k = degrees.iter().take_while(|&&x| x >= 2).count();
    if k == degrees.len() || degrees[k..].iter().any(|&x| x != 1) {
        return Err(Error::invalid("expected degrees >= 2 followed by ones"));
    }
    if k < 3 {
        return Err(Error::invalid(
            "a cycle needs at least three vertices of degree >= 2",
        ));
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn named_families() {
        let k4 = complete(4);
        assert_eq!(k4.m(), 6);
        assert_eq!(k4.degrees(), vec![3; 4]);
        let c5 = cycle(5);
        assert_eq!(c5.degrees(), vec![2; 5]);
        assert_eq!(c5.girth(), Some(5));
        assert_eq!(path(3).n(), 4);
        assert_eq!(path(3).m(), 3);
    }

    #[test]
    fn wedge_counts() {
        let w = wedge(&cycle(3), &path(2));
        assert_eq!((w.n(), w.m()), (5, 5));
        assert_eq!(w.degree(0), 3);
        assert!(w.is_connected());
        let w2 = wedge_at(&cycle(3), &path(2), 2);
        assert_eq!(w2.degree(2), 3);
    }

    #[test]
    fn worked_example_triangle() {
        let g = unicyclic_construct(&seq(&[3, 3, 2, 2, 1, 1]), 3).unwrap();
        // 1-indexed: {12, 23, 13, 14, 25, 46}
        let expected =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (3, 5)]).unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn two_regular_is_the_cycle() {
        let d = seq(&[2; 5]);
        assert_eq!(unicyclic_construct(&d, 5).unwrap(), cycle(5));
        assert!(unicyclic_construct(&d, 3).is_err());
    }

    #[test]
    fn square_variant() {
        let g = unicyclic_construct(&seq(&[3, 3, 2, 2, 1, 1]), 4).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.m(), 6);
        assert_eq!(g.degrees(), vec![3, 3, 2, 2, 1, 1]);
        assert_eq!(g.unique_cycle_length(), Some(4));
        assert_eq!(g.girth(), Some(4));
    }

    #[test]
    fn rejects_bad_inputs() {
        let d = seq(&[3, 3, 2, 2, 1, 1]);
        assert!(unicyclic_construct(&d, 2).is_err());
        assert!(unicyclic_construct(&d, 5).is_err());
        assert!(unicyclic_construct(&seq(&[5, 3, 1, 1, 1, 1]), 3).is_err());
        assert!(unicyclic_construct(&seq(&[3, 3, 2, 1, 1]), 3).is_ok());
        assert!(unicyclic_construct(&seq(&[4, 2, 2, 1, 1, 1, 1]), 3).is_err());
    }

    #[test]
    fn every_valid_length_realized() {
        let d = seq(&[4, 3, 3, 2, 2, 2, 1, 1, 1, 1]);
        for m in 3..=6 {
            let g = unicyclic_construct(&d, m).unwrap();
            assert_eq!(g.degrees(), d.as_slice());
            assert_eq!(g.unique_cycle_length(), Some(m));
        }
    }
}
