use super::Graph;
use crate::scalar::Scalar;

/// Local clustering coefficient: edges among the neighbors of `v` divided by
/// `C(deg v, 2)`. Vertices of degree 0 or 1 score 0.
pub fn local_clustering<T: Scalar>(g: &Graph, v: usize) -> T {
    let (links, possible) = neighbor_links(g, v);
    if possible == 0 {
        T::zero()
    } else {
        T::from_ratio(links, possible)
    }
}

/// Average of [`local_clustering`] over all vertices.
pub fn average_local_clustering<T: Scalar>(g: &Graph) -> T {
    let total = (0..g.n()).fold(T::zero(), |acc, v| acc + local_clustering::<T>(g, v));
    total / T::from_ratio(g.n() as u64, 1)
}

fn neighbor_links(g: &Graph, v: usize) -> (u64, u64) {
    let nbrs = g.neighbors(v);
    let deg = nbrs.len() as u64;
    if deg < 2 {
        return (0, 0);
    }
    let mut links = 0;
    for (i, &a) in nbrs.iter().enumerate() {
        // both lists sorted; count common elements above `a`
        let tail = &nbrs[i + 1..];
        let adj = g.neighbors(a);
        let (mut p, mut q) = (0, adj.partition_point(|&x| x <= a));
        while p < tail.len() && q < adj.len() {
            match tail[p].cmp(&adj[q]) {
                std::cmp::Ordering::Less => p += 1,
                std::cmp::Ordering::Greater => q += 1,
                std::cmp::Ordering::Equal => {
                    links += 1;
                    p += 1;
                    q += 1;
                }
            }
        }
    }
    (links, deg * (deg - 1) / 2)
}
