use rand::seq::index;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Erdős–Rényi `G(n, p)`: each of the `C(n, 2)` pairs is an edge independently with probability `p`.
pub fn sample_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            // gen() lies in [0, 1): p = 0 never fires, p = 1 always does
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted_unchecked(n.max(1), edges))
}

/// Draws from `G(n, p)` until the sample is connected, giving up after `max_rejects` rejections.
pub fn sample_gnp_connected<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    rng: &mut R,
    max_rejects: u64,
) -> Result<Graph> {
    let mut attempts = 0;
    loop {
        let g = sample_gnp(n, p, rng)?;
        attempts += 1;
        if g.is_connected() {
            return Ok(g);
        }
        if attempts > max_rejects {
            return Err(Error::RejectionLimit { attempts });
        }
    }
}

/// Uniform labeled tree on `n` vertices from a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 1);
    if n <= 2 {
        return Graph::from_edges(n, (n == 2).then_some((0, 1))).expect("tiny tree");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    tree_from_prufer(n, &code)
}

pub(crate) fn tree_from_prufer(n: usize, code: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("Prüfer decoding always has a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(std::cmp::Reverse(c));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().expect("two leaves remain");
    let std::cmp::Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Graph::from_edges(n, edges).expect("Prüfer tree is simple")
}

/// `k`-th vertex pair in the column-major order `(0,1), (0,2), (1,2), (0,3), ...`.
pub(crate) fn pair_at(k: usize) -> (usize, usize) {
    let mut j = ((1.0 + (1.0 + 8.0 * k as f64).sqrt()) / 2.0) as usize;
    while j * (j - 1) / 2 > k {
        j -= 1;
    }
    while (j + 1) * j / 2 <= k {
        j += 1;
    }
    (k - j * (j - 1) / 2, j)
}

/// Random connected graph with `n` vertices and `m` edges: uniform `m`-subsets
/// of the pairs are tried `tries` times, then a random tree is padded with
/// uniformly chosen extra edges.
pub fn random_connected_nm<R: Rng + ?Sized>(
    n: usize,
    m: usize,
    tries: usize,
    rng: &mut R,
) -> Result<Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    if n == 0 || m + 1 < n || m > pairs {
        return Err(Error::invalid(format!(
            "no connected graph has {n} vertices and {m} edges"
        )));
    }
    for _ in 0..tries {
        let edges = index::sample(rng, pairs, m).into_iter().map(pair_at);
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    let tree = random_tree(n, rng);
    let free: Vec<(usize, usize)> = (0..pairs)
        .map(pair_at)
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .collect();
    let extra = index::sample(rng, free.len(), m - (n - 1))
        .into_iter()
        .map(|i| free[i]);
    Graph::from_edges(n, tree.edges().iter().copied().chain(extra))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;
    use crate::samplers::RandomSource;

    #[test]
    fn extreme_probabilities() {
        let mut rng = RandomSource::seed_from_u64(3);
        assert_eq!(sample_gnp(6, 0.0, &mut rng).unwrap().m(), 0);
        assert_eq!(sample_gnp(6, 1.0, &mut rng).unwrap(), complete(6));
        assert!(sample_gnp(6, 1.5, &mut rng).is_err());
        assert!(sample_gnp(6, f64::NAN, &mut rng).is_err());
    }

    #[test]
    fn connected_rejection() {
        let mut rng = RandomSource::seed_from_u64(5);
        assert_eq!(
            sample_gnp_connected(7, 1.0, &mut rng, 0).unwrap(),
            complete(7)
        );
        assert_eq!(
            sample_gnp_connected(5, 0.0, &mut rng, 3),
            Err(Error::RejectionLimit { attempts: 4 })
        );
    }

    #[test]
    fn connected_three_vertex_draws_are_the_four_connected_graphs() {
        let mut rng = RandomSource::seed_from_u64(11);
        let mut seen = std::collections::BTreeSet::new();
        for _ in 0..400 {
            let g = sample_gnp_connected(3, 0.5, &mut rng, 1000).unwrap();
            assert!(g.is_connected());
            seen.insert(g.edges().to_vec());
        }
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn pair_indexing() {
        let pairs: Vec<_> = (0..10).map(pair_at).collect();
        assert_eq!(pairs[..4], [(0, 1), (0, 2), (1, 2), (0, 3)]);
        assert_eq!(pairs[9], (3, 4));
        for k in 0..5000 {
            let (i, j) = pair_at(k);
            assert!(i < j);
            assert_eq!(j * (j - 1) / 2 + i, k);
        }
    }

    #[test]
    fn prufer_trees() {
        let mut rng = RandomSource::seed_from_u64(1);
        for n in 1..12 {
            let t = random_tree(n, &mut rng);
            assert_eq!(t.m(), n - 1);
            assert!(t.is_connected());
        }
    }

    #[test]
    fn connected_nm_fallback() {
        let mut rng = RandomSource::seed_from_u64(9);
        // zero rejection tries forces the tree-plus-edges path
        let g = random_connected_nm(12, 14, 0, &mut rng).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.m(), 14);
        assert!(random_connected_nm(5, 3, 10, &mut rng).is_err());
        assert!(random_connected_nm(4, 7, 10, &mut rng).is_err());
    }
}
