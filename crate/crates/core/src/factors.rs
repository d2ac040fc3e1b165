//! 1-factors and k-factors.
//!
//! k-factor existence is reduced to perfect matching on Tutte's gadget
//! graph: every vertex `v` is replaced by `d(v)` external nodes (one per
//! incident edge) and `d(v) - k` internal nodes, internal and external nodes
//! of the same vertex form a complete bipartite graph, and the two external
//! nodes of each original edge are joined. In a perfect matching the internal
//! nodes of `v` absorb all but `k` of its external nodes; the remaining `k`
//! are matched across original edges, and those edges form the factor.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use crate::matching::{max_matching, maximum_matching, Matching};

/// Largest edge count accepted by [`brute_force_k_factor`].
pub const BRUTE_FORCE_MAX_EDGES: usize = 24;

/// A spanning subgraph in which every vertex has degree exactly `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorCertificate {
    pub k: usize,
    edges: Vec<(usize, usize)>,
}

impl FactorCertificate {
    fn new(k: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        FactorCertificate { k, edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Every edge lies in `g` and every vertex of `g` has certificate degree `k`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut deg = vec![0usize; g.n()];
        let mut seen = vec![0u64; g.n()];
        for &(u, v) in &self.edges {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) || seen[u] & bit(v) != 0 {
                return false;
            }
            seen[u] |= bit(v);
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.iter().all(|&d| d == self.k)
    }
}

impl From<&Matching> for FactorCertificate {
    fn from(m: &Matching) -> Self {
        FactorCertificate::new(1, m.edges().to_vec())
    }
}

/// A perfect matching of `g`, if one exists.
pub fn has_one_factor(g: &Graph) -> Option<Matching> {
    if g.n() % 2 == 1 {
        return None;
    }
    let m = max_matching(g);
    (2 * m.len() == g.n()).then_some(m)
}

/// A k-factor of `g`, if one exists.
pub fn has_k_factor(g: &Graph, k: usize) -> Option<FactorCertificate> {
    let n = g.n();
    if k == 0 {
        return Some(FactorCertificate::new(0, Vec::new()));
    }
    if (n * k) % 2 == 1 || n <= k || g.min_degree() < k {
        return None;
    }
    if k == 1 {
        return has_one_factor(g).map(|m| FactorCertificate::from(&m));
    }

    // Node layout per vertex v: d(v) external nodes, ordered by neighbour
    // index, followed by d(v) - k internal nodes.
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + 2 * g.degree(v) - k;
    }
    let external = |v: usize, w: usize| offset[v] + (g.row(v) & (bit(w) - 1)).count_ones() as usize;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); offset[n]];
    for v in 0..n {
        let d = g.degree(v);
        let ext = offset[v]..offset[v] + d;
        let int = offset[v] + d..offset[v + 1];
        for x in ext.clone() {
            adj[x].extend(int.clone());
        }
        for y in int {
            adj[y].extend(ext.clone());
        }
    }
    for (u, v) in g.edges() {
        let (a, b) = (external(u, v), external(v, u));
        adj[a].push(b);
        adj[b].push(a);
    }

    let mate = maximum_matching(&adj);
    if mate.iter().any(Option::is_none) {
        return None;
    }
    let edges: Vec<_> = g
        .edges()
        .filter(|&(u, v)| mate[external(u, v)] == Some(external(v, u)))
        .collect();
    let cert = FactorCertificate::new(k, edges);
    assert!(cert.is_valid_in(g), "gadget matching produced an invalid {k}-factor");
    Some(cert)
}

/// Exhaustive k-factor search over all `2^e` edge subsets (Gray-code order).
pub fn brute_force_k_factor(g: &Graph, k: usize) -> Result<Option<FactorCertificate>> {
    let edges: Vec<_> = g.edges().collect();
    if edges.len() > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::TooLarge(format!(
            "{} edges exceeds the brute-force limit of {BRUTE_FORCE_MAX_EDGES}",
            edges.len()
        )));
    }
    let n = g.n();
    let mut deg = vec![0usize; n];
    // Number of vertices whose degree in the current subset equals k.
    let mut exact = if k == 0 { n } else { 0 };
    let mut found = exact == n;
    let mut code = 0u32;
    let total = 1u32 << edges.len();
    let mut i = 1u32;
    while !found && i < total {
        let e = i.trailing_zeros() as usize;
        let (u, v) = edges[e];
        let adding = code & (1 << e) == 0;
        code ^= 1 << e;
        for w in [u, v] {
            if deg[w] == k {
                exact -= 1;
            }
            if adding {
                deg[w] += 1;
            } else {
                deg[w] -= 1;
            }
            if deg[w] == k {
                exact += 1;
            }
        }
        found = exact == n;
        i += 1;
    }
    if !found {
        return Ok(None);
    }
    let chosen = (0..edges.len()).filter(|&e| code & (1 << e) != 0).map(|e| edges[e]).collect();
    Ok(Some(FactorCertificate::new(k, chosen)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    #[test]
    fn one_factor_examples() {
        let c6 = Graph::circulant(6, 2).unwrap();
        let m = has_one_factor(&c6).unwrap();
        assert!(m.is_perfect_in(&c6));
        assert!(has_one_factor(&Graph::complete(5).unwrap()).is_none());
        for (n, delta) in [(8, 2), (10, 2), (12, 4), (20, 6)] {
            let a = Family::Ex1fA { n, delta }.build().unwrap();
            assert!(has_one_factor(&a).is_none(), "EX_1F_A({n},{delta})");
        }
        for (n, delta) in [(8, 1), (10, 2), (12, 3), (20, 5)] {
            let b = Family::Ex1fB { n, delta }.build().unwrap();
            assert!(has_one_factor(&b).is_none(), "EX_1F_B({n},{delta})");
        }
    }

    #[test]
    fn k_factor_examples() {
        for k in 1..=6 {
            let g = Graph::complete(k + 1).unwrap();
            if (k + 1) * k % 2 == 0 {
                let c = has_k_factor(&g, k).unwrap();
                assert_eq!(c.edges().len(), g.edge_count());
            }
        }
        for n in 3..=12 {
            let c = Graph::circulant(n, 2).unwrap();
            assert!(has_k_factor(&c, 2).unwrap().is_valid_in(&c));
        }
        assert!(has_k_factor(&Graph::star(4).unwrap(), 1).is_none());
        assert!(has_k_factor(&Graph::petersen(), 3).is_some());
        // The Petersen graph has no 2-factor made of a single cycle but does
        // have 2-factors (two 5-cycles).
        assert!(has_k_factor(&Graph::petersen(), 2).is_some());
    }

    #[test]
    fn brute_force_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert!(brute_force_k_factor(&k4, 2).unwrap().unwrap().is_valid_in(&k4));
        let k4_minus = k4.without_edge(0, 1).without_edge(2, 3);
        let c = brute_force_k_factor(&k4_minus, 2).unwrap().unwrap();
        assert_eq!(c.edges().len(), 4);
        assert!(brute_force_k_factor(&Graph::star(3).unwrap(), 1).unwrap().is_none());
        assert!(brute_force_k_factor(&Graph::complete(8).unwrap(), 1).is_err());
        assert!(brute_force_k_factor(&Graph::empty(3).unwrap(), 0).unwrap().is_some());
    }
}
