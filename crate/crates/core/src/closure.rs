//! The `l`-closure: repeatedly join non-adjacent pairs whose degree sum is
//! at least `l` until no such pair remains.

use std::collections::VecDeque;

use crate::graph::{bit, bits, Graph, MAX_VERTICES};

/// Degree-sum threshold `l` of a closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClosureIndex(pub usize);

impl ClosureIndex {
    /// `l = n - 1`, the index preserving 1-factor existence.
    pub fn one_factor(n: usize) -> Self {
        ClosureIndex(n.saturating_sub(1))
    }

    /// `l = n + 2k - 4`, the index preserving k-factor existence for `k >= 2`.
    pub fn k_factor(n: usize, k: usize) -> Self {
        ClosureIndex((n + 2 * k).saturating_sub(4))
    }

    /// `l = n - (k - 2)m - 1`, the index preserving spanning k-tree existence
    /// in m-connected graphs.
    pub fn spanning_k_tree(n: usize, k: usize, m: usize) -> Self {
        ClosureIndex((n + 2 * m).saturating_sub(k * m + 1))
    }
}

/// `C_l(G)`.
///
/// Pairs are examined through a work queue seeded with every non-edge in
/// lexicographic order; whenever an edge is added, the non-edges at its two
/// endpoints are re-queued because their degree sums grew.
pub fn l_closure(g: &Graph, l: ClosureIndex) -> Graph {
    let n = g.n();
    let l = l.0;
    let all = g.vertex_mask();
    let mut rows: [u64; MAX_VERTICES] = [0; MAX_VERTICES];
    rows[..n].copy_from_slice(g.rows());
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();

    let mut queued = [0u64; MAX_VERTICES];
    let mut queue = VecDeque::new();
    for (u, v) in g.non_edges() {
        queued[u] |= bit(v);
        queue.push_back((u, v));
    }
    while let Some((u, v)) = queue.pop_front() {
        queued[u] &= !bit(v);
        if rows[u] & bit(v) != 0 || deg[u] + deg[v] < l {
            continue;
        }
        rows[u] |= bit(v);
        rows[v] |= bit(u);
        deg[u] += 1;
        deg[v] += 1;
        for x in [u, v] {
            for y in bits(!rows[x] & all & !bit(x)) {
                let (a, b) = if x < y { (x, y) } else { (y, x) };
                if queued[a] & bit(b) == 0 {
                    queued[a] |= bit(b);
                    queue.push_back((a, b));
                }
            }
        }
    }
    Graph::from_rows(n, &rows)
}

/// `C_{n-1}(G)`.
pub fn closure_for_one_factor(g: &Graph) -> Graph {
    l_closure(g, ClosureIndex::one_factor(g.n()))
}

/// `C_{n+2k-4}(G)`.
pub fn closure_for_k_factor(g: &Graph, k: usize) -> Graph {
    l_closure(g, ClosureIndex::k_factor(g.n(), k))
}

/// `C_{n-(k-2)m-1}(G)`.
pub fn closure_for_spanning_k_tree(g: &Graph, k: usize, m: usize) -> Graph {
    l_closure(g, ClosureIndex::spanning_k_tree(g.n(), k, m))
}

/// Whether `g` is `l`-closed: every non-adjacent pair has degree sum `< l`.
pub fn is_closed(g: &Graph, l: ClosureIndex) -> bool {
    g.non_edges().all(|(u, v)| g.degree(u) + g.degree(v) < l.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    #[test]
    fn indices() {
        assert_eq!(ClosureIndex::one_factor(10), ClosureIndex(9));
        assert_eq!(ClosureIndex::k_factor(10, 2), ClosureIndex(10));
        assert_eq!(ClosureIndex::spanning_k_tree(10, 2, 1), ClosureIndex(9));
        assert_eq!(ClosureIndex::spanning_k_tree(14, 3, 2), ClosureIndex(11));
    }

    #[test]
    fn path_cascades_to_complete() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(l_closure(&p4, ClosureIndex(3)), Graph::complete(4).unwrap());
        // l = 4 on P_4: the pairs (1,3) and (0,2) have degree sum 3, (0,3) has 2; nothing qualifies.
        assert_eq!(closure_for_k_factor(&p4, 2), p4);
    }

    #[test]
    fn trivial_cases() {
        for n in 1..=8 {
            let k = Graph::complete(n).unwrap();
            for l in 0..2 * n {
                assert_eq!(l_closure(&k, ClosureIndex(l)), k);
            }
        }
        let g = Graph::petersen();
        assert_eq!(l_closure(&g, ClosureIndex(2 * g.n())), g);
        assert_eq!(l_closure(&g, ClosureIndex(0)), Graph::complete(10).unwrap());
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(closure_for_one_factor(&k2), k2);
    }

    #[test]
    fn named_closures() {
        let c4 = Graph::circulant(4, 2).unwrap();
        assert_eq!(closure_for_one_factor(&c4), Graph::complete(4).unwrap());
        let c5 = Graph::circulant(5, 2).unwrap();
        assert_eq!(closure_for_k_factor(&c5, 2), c5);

        for (n, delta) in [(8, 1), (10, 2), (12, 3), (16, 4)] {
            let g = Family::Ex1fB { n, delta }.build().unwrap();
            assert_eq!(closure_for_one_factor(&g), g, "n={n} δ={delta}");
        }
        for (n, m, k) in [(10, 1, 2), (14, 1, 3), (14, 2, 2), (20, 2, 3), (28, 3, 2)] {
            let g = Family::ExKTree { n, m, k }.build().unwrap();
            assert_eq!(closure_for_spanning_k_tree(&g, k, m), g, "n={n} m={m} k={k}");
        }
    }
}
