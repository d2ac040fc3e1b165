//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` row mask per vertex, so neighbourhood
//! intersections, degree counts and reachability sweeps are word-parallel.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on the number of vertices of a [`Graph`].
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate over the indices of set bits, lowest first.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A set of vertices, as a bitmask over `0..n`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// All vertices `0..n`.
    pub const fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        bits(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Summary statistics of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphStats {
    pub edges: usize,
    pub min_degree: usize,
    pub isolated: usize,
    pub connected: bool,
    pub components: usize,
}

/// Immutable simple undirected graph on `1..=64` vertices.
///
/// Rows are symmetric, irreflexive, and carry no bits at positions `>= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: [u64; MAX_VERTICES],
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::VertexCount(n))
    }
}

impl Graph {
    /// Builds a graph from raw row masks. Callers guarantee the invariants.
    pub(crate) fn from_rows(n: usize, rows: &[u64]) -> Self {
        let mut g = Graph { n, rows: [0; MAX_VERTICES] };
        g.rows[..n].copy_from_slice(&rows[..n]);
        debug_assert!(g.check_invariants());
        g
    }

    fn check_invariants(&self) -> bool {
        let mask = low_mask(self.n);
        (0..self.n).all(|v| {
            let r = self.rows[v];
            r & !mask == 0 && r & bit(v) == 0 && bits(r).all(|u| self.rows[u] & bit(v) != 0)
        }) && self.rows[self.n..].iter().all(|&r| r == 0)
    }

    /// Graph with the given edge list. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut rows = [0u64; MAX_VERTICES];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u] |= bit(v);
            rows[v] |= bit(u);
        }
        Ok(Graph { n, rows })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let mask = low_mask(n);
        let mut rows = [0u64; MAX_VERTICES];
        for (v, row) in rows.iter_mut().enumerate().take(n) {
            *row = mask & !bit(v);
        }
        Ok(Graph { n, rows })
    }

    /// The edgeless graph `I_n`.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, rows: [0; MAX_VERTICES] })
    }

    /// The path `P_n` on vertices `0, 1, ..., n-1` in order.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    /// Circulant realisation of a `t`-regular graph on `n` vertices: vertex
    /// `i` is joined to `i ± 1, ..., i ± ⌊t/2⌋ (mod n)`, and additionally to
    /// `i + n/2` when `t` is odd.
    pub fn circulant(n: usize, t: usize) -> Result<Self> {
        check_order(n)?;
        if t >= n || (n * t) % 2 == 1 {
            return Err(Error::NoRegularGraph { n, t });
        }
        let mut rows = [0u64; MAX_VERTICES];
        for i in 0..n {
            for d in 1..=t / 2 {
                rows[i] |= bit((i + d) % n) | bit((i + n - d) % n);
            }
            if t % 2 == 1 {
                rows[i] |= bit((i + n / 2) % n);
            }
        }
        Ok(Graph { n, rows })
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("static edge list")
    }

    /// `g1 ∨ g2`: disjoint union plus every edge between the two vertex sets.
    /// Vertices of `g1` come first.
    pub fn join(g1: &Graph, g2: &Graph) -> Result<Self> {
        Self::combine(g1, g2, true)
    }

    /// `g1 + g2`: vertex-disjoint union, vertices of `g1` first.
    pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Self> {
        Self::combine(g1, g2, false)
    }

    fn combine(g1: &Graph, g2: &Graph, cross: bool) -> Result<Self> {
        let n = g1.n + g2.n;
        check_order(n)?;
        let left = low_mask(g1.n);
        let right = low_mask(n) & !left;
        let mut rows = [0u64; MAX_VERTICES];
        for v in 0..g1.n {
            rows[v] = g1.rows[v] | if cross { right } else { 0 };
        }
        for v in 0..g2.n {
            rows[g1.n + v] = (g2.rows[v] << g1.n) | if cross { left } else { 0 };
        }
        Ok(Graph { n, rows })
    }

    /// `G - S`: the subgraph induced on the complement of `s`, relabelled
    /// so that surviving vertices keep their relative order.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<Self> {
        let keep = self.vertex_mask() & !s.mask();
        if keep == 0 {
            return Err(Error::DeleteAll);
        }
        Ok(self.induced(keep))
    }

    /// Subgraph induced by `keep`, relabelled order-preservingly.
    pub(crate) fn induced(&self, keep: u64) -> Graph {
        let order: Vec<usize> = bits(keep).collect();
        let mut rows = [0u64; MAX_VERTICES];
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate() {
                if self.rows[u] & bit(v) != 0 {
                    rows[i] |= bit(j);
                }
            }
        }
        Graph { n: order.len(), rows }
    }

    /// Copy of this graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u < self.n && v < self.n && u != v, "invalid edge ({u}, {v})");
        let mut g = self.clone();
        g.rows[u] |= bit(v);
        g.rows[v] |= bit(u);
        g
    }

    /// Copy of this graph with the edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u < self.n && v < self.n, "invalid edge ({u}, {v})");
        let mut g = self.clone();
        g.rows[u] &= !bit(v);
        g.rows[v] &= !bit(u);
        g
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = [0u64; MAX_VERTICES];
        for u in 0..self.n {
            for v in bits(self.rows[u]) {
                rows[perm[u]] |= bit(perm[v]);
            }
        }
        Graph::from_rows(self.n, &rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows[..self.n]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Number of isolated vertices, `i(G)`.
    pub fn isolated_count(&self) -> usize {
        self.rows().iter().filter(|&&r| r == 0).count()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.rows[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Non-edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = self.vertex_mask();
        (0..self.n)
            .flat_map(move |u| bits(!self.rows[u] & all & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertex_mask())
    }

    pub(crate) fn components_within(&self, within: u64) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach(left.trailing_zeros() as usize, within);
            out.push(VertexSet(c));
            left &= !c;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Whether the subgraph induced by `within` is connected (vacuously true if empty).
    pub(crate) fn is_connected_within(&self, within: u64) -> bool {
        within == 0 || self.reach(within.trailing_zeros() as usize, within) == within
    }

    pub fn stats(&self) -> GraphStats {
        let components = self.components().len();
        GraphStats {
            edges: self.edge_count(),
            min_degree: self.min_degree(),
            isolated: self.isolated_count(),
            connected: components == 1,
            components,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {})", self.n, crate::graph6::encode(self))
    }
}
