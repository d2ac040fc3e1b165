//! Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm).
//!
//! Works on plain adjacency lists so that it can run both on [`Graph`]
//! values and on the larger gadget graphs built by the k-factor reduction.

use std::collections::VecDeque;

use crate::graph::{bits, Graph};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges, each stored as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Builds a matching from a mate array (`mate[v] == Some(u)` iff `uv` matched).
    pub fn from_mates(mate: &[Option<usize>]) -> Self {
        let mut edges: Vec<_> = mate
            .iter()
            .enumerate()
            .filter_map(|(v, &m)| m.filter(|&u| v < u).map(|u| (v, u)))
            .collect();
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Pairwise disjoint and every edge present in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut covered = 0u64;
        self.edges.iter().all(|&(u, v)| {
            let ok = u < g.n() && v < g.n() && g.has_edge(u, v) && covered & (1 << u | 1 << v) == 0;
            covered |= 1 << u | 1 << v;
            ok
        })
    }

    /// Covers every vertex of `g`.
    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        self.is_valid_in(g) && 2 * self.len() == g.n()
    }
}

/// Maximum matching of `g`. Deterministic: vertices are scanned in index order.
pub fn max_matching(g: &Graph) -> Matching {
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| bits(g.row(v)).collect()).collect();
    Matching::from_mates(&maximum_matching(&adj))
}

/// Maximum matching on an adjacency-list graph; returns the mate array.
pub(crate) fn maximum_matching(adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut search = BlossomSearch::new(adj);
    search.greedy();
    for root in 0..adj.len() {
        if search.mate[root] == NONE && !adj[root].is_empty() {
            if let Some(end) = search.augmenting_path(root) {
                search.augment(end);
            }
        }
    }
    search.mate.iter().map(|&m| (m != NONE).then_some(m)).collect()
}

struct BlossomSearch<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> BlossomSearch<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        BlossomSearch {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            on_path: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn greedy(&mut self) {
        for v in 0..self.adj.len() {
            if self.mate[v] == NONE {
                if let Some(&u) = self.adj[v].iter().find(|&&u| self.mate[u] == NONE) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
    }

    /// Lowest common ancestor of the (contracted) vertices `a` and `b` in
    /// the alternating tree.
    fn common_base(&mut self, mut a: usize, mut b: usize) -> usize {
        self.on_path.iter_mut().for_each(|x| *x = false);
        loop {
            a = self.base[a];
            self.on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_blossom(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free end vertex.
    fn augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        for v in 0..n {
            self.parent[v] = NONE;
            self.base[v] = v;
            self.in_tree[v] = false;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let b = self.common_base(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_blossom(v, b, to);
                    self.mark_blossom(to, b, v);
                    for x in 0..n {
                        if self.in_blossom[self.base[x]] {
                            self.base[x] = b;
                            if !self.in_tree[x] {
                                self.in_tree[x] = true;
                                self.queue.push_back(x);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.in_tree[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, end: usize) {
        let mut v = end;
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}
