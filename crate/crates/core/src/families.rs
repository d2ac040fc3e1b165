//! Named extremal graph families.
//!
//! Every family is built as hub part first, clique part second and the
//! independent (or regular) part last, so vertex labels and graph6 output are
//! deterministic and the part boundaries can be reported alongside a graph.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

/// A named family member, identified by its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `K_{n-δ-1} ∪ K_{δ+1}`.
    Ex1fA { n: usize, delta: usize },
    /// `K_δ ∨ (K_{n-2δ-1} + I_{δ+1})`.
    Ex1fB { n: usize, delta: usize },
    /// `K_m ∨ (K_{n-km-1} + I_{km-m+1})`.
    ExKTree { n: usize, m: usize, k: usize },
    /// `K_δ ∨ (K_{n-kδ-2δ} + I_{kδ+δ})`.
    ExLeaf { n: usize, delta: usize, k: usize },
    /// `K_1 ∨ (K_{n-k-1} + I_k)`.
    ExFan { n: usize, k: usize },
    /// `K_a ∨ (K_b + I_c)`.
    Gen3 { a: usize, b: usize, c: usize },
    /// `K_s ∨ (K_b + R(p, t))` with `R(p, t)` the circulant t-regular graph.
    JoinReg { s: usize, b: usize, p: usize, t: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tail {
    Independent(usize),
    Clique(usize),
    Regular { p: usize, t: usize },
}

impl Tail {
    fn len(self) -> usize {
        match self {
            Tail::Independent(c) | Tail::Clique(c) => c,
            Tail::Regular { p, .. } => p,
        }
    }
}

/// Contiguous vertex ranges of the hub, clique and tail parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parts {
    pub hub: Range<usize>,
    pub clique: Range<usize>,
    pub tail: Range<usize>,
}

fn size(n: usize, minus: usize, what: &str) -> Result<usize> {
    n.checked_sub(minus)
        .ok_or_else(|| Error::Range(format!("{what}: part size n - {minus} is negative for n = {n}")))
}

impl Family {
    /// Hub size, clique size, tail shape, and whether the hub is joined to
    /// the rest (false only for the disjoint union `EX_1F_A`).
    fn shape(&self) -> Result<(usize, usize, Tail)> {
        Ok(match *self {
            Family::Ex1fA { n, delta } => {
                let b = size(n, delta + 1, "EX_1F_A")?;
                if b == 0 {
                    return Err(Error::Range("EX_1F_A needs n > δ + 1".into()));
                }
                (0, b, Tail::Clique(delta + 1))
            }
            Family::Ex1fB { n, delta } => {
                (delta, size(n, 2 * delta + 1, "EX_1F_B")?, Tail::Independent(delta + 1))
            }
            Family::ExKTree { n, m, k } => {
                if k == 0 {
                    return Err(Error::Range("EX_KTREE needs k >= 1".into()));
                }
                (m, size(n, k * m + 1, "EX_KTREE")?, Tail::Independent(k * m - m + 1))
            }
            Family::ExLeaf { n, delta, k } => {
                let c = (k + 1) * delta;
                (delta, size(n, c + delta, "EX_LEAF")?, Tail::Independent(c))
            }
            Family::ExFan { n, k } => (1, size(n, k + 1, "EX_FAN")?, Tail::Independent(k)),
            Family::Gen3 { a, b, c } => (a, b, Tail::Independent(c)),
            Family::JoinReg { s, b, p, t } => {
                if t >= p.max(1) || (p * t) % 2 == 1 {
                    return Err(Error::NoRegularGraph { n: p, t });
                }
                (s, b, Tail::Regular { p, t })
            }
        })
    }

    /// Vertex count.
    pub fn order(&self) -> Result<usize> {
        let (a, b, tail) = self.shape()?;
        Ok(a + b + tail.len())
    }

    /// Part boundaries under the hub, clique, tail layout.
    pub fn parts(&self) -> Result<Parts> {
        let (a, b, tail) = self.shape()?;
        Ok(Parts { hub: 0..a, clique: a..a + b, tail: a + b..a + b + tail.len() })
    }

    pub fn build(&self) -> Result<Graph> {
        let (a, b, tail) = self.shape()?;
        let n = a + b + tail.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut rows = [0u64; MAX_VERTICES];
        let mut link = |u: usize, v: usize| {
            rows[u] |= bit(v);
            rows[v] |= bit(u);
        };
        // Hub: a clique joined to every other vertex.
        for u in 0..a {
            for v in u + 1..n {
                link(u, v);
            }
        }
        for u in a..a + b {
            for v in u + 1..a + b {
                link(u, v);
            }
        }
        let t0 = a + b;
        match tail {
            Tail::Independent(_) => {}
            Tail::Clique(c) => {
                for u in 0..c {
                    for v in u + 1..c {
                        link(t0 + u, t0 + v);
                    }
                }
            }
            Tail::Regular { p, t } => {
                let r = Graph::circulant(p, t)?;
                for (u, v) in r.edges() {
                    link(t0 + u, t0 + v);
                }
            }
        }
        Ok(Graph::from_rows(n, &rows))
    }

    /// Closed-form edge count.
    pub fn edge_count(&self) -> Result<usize> {
        let (a, b, tail) = self.shape()?;
        let c = tail.len();
        let pairs = |x: usize| x * x.saturating_sub(1) / 2;
        let tail_edges = match tail {
            Tail::Independent(_) => 0,
            Tail::Clique(c) => pairs(c),
            Tail::Regular { p, t } => p * t / 2,
        };
        Ok(pairs(a) + a * (b + c) + pairs(b) + tail_edges)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Ex1fA { n, delta } => write!(f, "EX_1F_A(n={n},delta={delta})"),
            Family::Ex1fB { n, delta } => write!(f, "EX_1F_B(n={n},delta={delta})"),
            Family::ExKTree { n, m, k } => write!(f, "EX_KTREE(n={n},m={m},k={k})"),
            Family::ExLeaf { n, delta, k } => write!(f, "EX_LEAF(n={n},delta={delta},k={k})"),
            Family::ExFan { n, k } => write!(f, "EX_FAN(n={n},k={k})"),
            Family::Gen3 { a, b, c } => write!(f, "GEN3(a={a},b={b},c={c})"),
            Family::JoinReg { s, b, p, t } => write!(f, "JOINREG(s={s},b={b},p={p},t={t})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::binomial;

    #[test]
    fn edge_counts_match_construction() {
        let mut all = Vec::new();
        for n in 2..=20 {
            for d in 0..n {
                all.push(Family::Ex1fA { n, delta: d });
                all.push(Family::Ex1fB { n, delta: d });
                all.push(Family::ExFan { n, k: d });
                for k in 1..=3 {
                    all.push(Family::ExKTree { n, m: d, k });
                    all.push(Family::ExLeaf { n, delta: d, k });
                }
            }
        }
        for s in 0..3 {
            for b in 0..4 {
                for p in 1..7 {
                    for t in 0..p {
                        all.push(Family::JoinReg { s, b, p, t });
                    }
                }
            }
        }
        let mut built = 0;
        for f in all {
            if let Ok(g) = f.build() {
                built += 1;
                assert_eq!(g.edge_count(), f.edge_count().unwrap(), "{f}");
                assert_eq!(g.n(), f.order().unwrap(), "{f}");
            }
        }
        assert!(built > 500);
    }

    #[test]
    fn ktree_edge_closed_form() {
        for n in 1..=40usize {
            for m in 1..=3usize {
                for k in 2..=4usize {
                    let Ok(g) = (Family::ExKTree { n, m, k }).build() else { continue };
                    let clique = (n - (k - 1) * m - 1) as u64;
                    let want = binomial(clique, 2) + ((k - 1) * m * m + m) as u128;
                    assert_eq!(g.edge_count() as u128, want, "n={n} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn structure() {
        assert_eq!(Family::Gen3 { a: 3, b: 4, c: 0 }.build().unwrap(), Graph::complete(7).unwrap());
        let a = Family::Ex1fA { n: 10, delta: 2 }.build().unwrap();
        let want = Graph::disjoint_union(&Graph::complete(7).unwrap(), &Graph::complete(3).unwrap())
            .unwrap();
        assert_eq!(a, want);
        let f = Family::Ex1fB { n: 12, delta: 3 };
        let g = f.build().unwrap();
        for v in f.parts().unwrap().tail {
            assert_eq!(g.degree(v), 3);
        }
        let star = Family::ExFan { n: 5, k: 4 }.build().unwrap();
        assert_eq!(star, Graph::star(4).unwrap());
        assert!(Family::JoinReg { s: 1, b: 2, p: 5, t: 3 }.build().is_err());
        assert!(Family::ExKTree { n: 5, m: 2, k: 3 }.build().is_err());
        assert!(Family::Gen3 { a: 0, b: 0, c: 0 }.build().is_err());
    }
}
