//! Clique counts, clique number and the Pósa-property clique bound.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc
}

/// `N_r(G)`: the number of `r`-vertex complete subgraphs. `N_0 = 1`.
pub fn count_cliques(g: &Graph, r: usize) -> u128 {
    fn extend(g: &Graph, candidates: u64, left: usize) -> u128 {
        if left == 0 {
            return 1;
        }
        if (candidates.count_ones() as usize) < left {
            return 0;
        }
        if left == 1 {
            return candidates.count_ones() as u128;
        }
        let mut total = 0;
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // Only higher-indexed neighbours, so each clique is counted once.
            total += extend(g, rest & g.row(v), left - 1);
        }
        total
    }
    extend(g, g.vertex_mask(), r)
}

/// `ω(G)`, by branch and bound with a greedy colouring bound.
pub fn clique_number(g: &Graph) -> usize {
    fn colour_bound(g: &Graph, p: u64) -> usize {
        let mut uncoloured = p;
        let mut colours = 0;
        while uncoloured != 0 {
            colours += 1;
            let mut avail = uncoloured;
            while avail != 0 {
                let v = avail.trailing_zeros() as usize;
                avail &= !(1u64 << v) & !g.row(v);
                uncoloured &= !(1u64 << v);
            }
        }
        colours
    }
    fn expand(g: &Graph, size: usize, p: u64, best: &mut usize) {
        if p == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + colour_bound(g, p) <= *best {
            return;
        }
        let mut rest = p;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            expand(g, size + 1, rest & g.row(v), best);
        }
    }
    let mut best = 0;
    expand(g, 0, g.vertex_mask(), &mut best);
    best
}

/// Parameters `(s, q)` of the Pósa property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PosaQuery {
    pub s: usize,
    pub q: usize,
}

/// At least `s` vertices have degree at most `q`.
pub fn posa_property(g: &Graph, query: PosaQuery) -> bool {
    bits(g.vertex_mask()).filter(|&v| g.degree(v) <= query.q).count() >= query.s
}

/// `C(n-s, r) + s·C(q, r-1)`, the clique-count ceiling for graphs with the
/// `(s, q)` Pósa property. Requires `n >= s + q` and `r >= 1`.
pub fn posa_clique_bound(n: usize, s: usize, q: usize, r: usize) -> Result<u128> {
    if n < s + q {
        return Err(Error::Range(format!("Pósa bound needs n >= s + q, got n={n}, s={s}, q={q}")));
    }
    if r == 0 {
        return Err(Error::Range("Pósa bound needs r >= 1".into()));
    }
    Ok(binomial((n - s) as u64, r as u64) + s as u128 * binomial(q as u64, r as u64 - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    #[test]
    fn binomials() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(5, 7), 0);
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(61, 3), 35_990);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
        assert_eq!(binomial(200, 3), 1_313_400);
    }

    #[test]
    fn clique_counts() {
        for n in 1..=10 {
            let k = Graph::complete(n).unwrap();
            for r in 0..=n + 1 {
                assert_eq!(count_cliques(&k, r), binomial(n as u64, r as u64));
            }
        }
        let p = Graph::petersen();
        assert_eq!(count_cliques(&p, 2), 15);
        assert_eq!(count_cliques(&p, 3), 0);
        assert_eq!(count_cliques(&p, 1), 10);
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&Graph::complete(5).unwrap()), 5);
        assert_eq!(clique_number(&Graph::circulant(5, 2).unwrap()), 2);
        assert_eq!(clique_number(&Graph::empty(4).unwrap()), 1);
        assert_eq!(clique_number(&Graph::petersen()), 2);
        for (n, m, k) in [(10, 1, 2), (14, 2, 2), (14, 1, 3), (20, 3, 2), (30, 2, 4)] {
            let g = Family::ExKTree { n, m, k }.build().unwrap();
            assert_eq!(clique_number(&g), n - (k - 1) * m - 1);
        }
    }

    #[test]
    fn posa() {
        assert!(posa_property(&Graph::empty(5).unwrap(), PosaQuery { s: 5, q: 0 }));
        assert!(!posa_property(&Graph::complete(5).unwrap(), PosaQuery { s: 1, q: 3 }));
        for (n, delta) in [(8, 1), (12, 3)] {
            let g = Family::Ex1fB { n, delta }.build().unwrap();
            assert!(posa_property(&g, PosaQuery { s: delta + 1, q: delta }));
        }
        assert_eq!(posa_clique_bound(10, 3, 2, 2).unwrap(), 27);
        for n in 1..20 {
            assert_eq!(posa_clique_bound(n, n / 2, n / 3, 1).unwrap(), n as u128);
        }
        assert!(posa_clique_bound(4, 3, 2, 2).is_err());
    }
}
