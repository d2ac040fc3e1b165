//! Degree-constrained and leaf-degree-constrained spanning trees.
//!
//! Both deciders share one exact backtracking engine. The tree grows from
//! vertex 0; at each node a vertex `v` outside the tree is chosen and the
//! search branches on which tree vertex `v` hangs from, plus one extra branch
//! in which every edge between `v` and the current tree is forbidden (so `v`
//! must later hang from a vertex added after it). Every spanning tree of the
//! graph is reached by exactly one branch sequence, so the search is
//! complete; pruning only removes states that cannot be extended.

use crate::connectivity::subsets_of_size;
use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph, VertexSet, MAX_VERTICES};

/// Default cap on explored search nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Node budget for the exact searches. Exhausting it is an error, never "no".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: DEFAULT_NODE_BUDGET }
    }
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget { max_nodes }
    }
}

/// A spanning tree, as `n - 1` edges `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCertificate {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TreeCertificate {
    /// Validates the tree axioms: `n - 1` distinct edges, connected, spanning.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        if edges.len() + 1 != n {
            return Err(Error::InvalidTree(format!("{} edges on {n} vertices", edges.len())));
        }
        let g = Graph::from_edges(n, &edges)?;
        if g.edge_count() != edges.len() || !g.is_connected() {
            return Err(Error::InvalidTree("edges do not form a spanning tree".into()));
        }
        let mut edges: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        Ok(TreeCertificate { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Every tree edge is an edge of `g` and the orders agree.
    pub fn is_spanning_tree_of(&self, g: &Graph) -> bool {
        self.n == g.n() && self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
    }

    fn as_graph(&self) -> Graph {
        Graph::from_edges(self.n, &self.edges).expect("validated on construction")
    }
}

/// Largest number of leaves adjacent to a single vertex of `t`.
///
/// For the one-edge tree both endpoints are leaves adjacent to a leaf, so
/// the value is 1; the single-vertex tree has leaf degree 0.
pub fn leaf_degree(t: &TreeCertificate) -> usize {
    let g = t.as_graph();
    let leaves = (0..g.n()).filter(|&v| g.degree(v) == 1).fold(0u64, |m, v| m | bit(v));
    (0..g.n()).map(|v| (g.row(v) & leaves).count_ones() as usize).max().unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Constraint {
    MaxDegree(usize),
    MaxLeafDegree(usize),
}

struct TreeSearch<'g> {
    g: &'g Graph,
    all: u64,
    constraint: Constraint,
    max_nodes: u64,
    nodes: u64,
    in_tree: u64,
    /// Graph edges not yet forbidden by an exclusion branch.
    allowed: [u64; MAX_VERTICES],
    tree_adj: [u64; MAX_VERTICES],
    /// Insertion time of each tree vertex.
    added_at: [usize; MAX_VERTICES],
    edges: Vec<(usize, usize)>,
}

impl<'g> TreeSearch<'g> {
    fn new(g: &'g Graph, constraint: Constraint, budget: SearchBudget) -> Self {
        let mut allowed = [0; MAX_VERTICES];
        allowed[..g.n()].copy_from_slice(g.rows());
        TreeSearch {
            g,
            all: g.vertex_mask(),
            constraint,
            max_nodes: budget.max_nodes,
            nodes: 0,
            in_tree: bit(0),
            allowed,
            tree_adj: [0; MAX_VERTICES],
            added_at: [0; MAX_VERTICES],
            edges: Vec::with_capacity(g.n()),
        }
    }

    fn run(mut self) -> Result<Option<TreeCertificate>> {
        if self.search()? {
            Ok(Some(TreeCertificate::new(self.g.n(), self.edges).expect("search yields a tree")))
        } else {
            Ok(None)
        }
    }

    #[inline]
    fn tree_degree(&self, u: usize) -> usize {
        self.tree_adj[u].count_ones() as usize
    }

    /// Tree vertices that can still take another child.
    fn open(&self) -> u64 {
        match self.constraint {
            Constraint::MaxDegree(k) => bits(self.in_tree)
                .filter(|&u| self.tree_degree(u) < k)
                .fold(0, |m, u| m | bit(u)),
            Constraint::MaxLeafDegree(_) => self.in_tree,
        }
    }

    /// Tree vertices of degree at most 1 that can never gain a neighbour.
    fn permanent_leaves(&self, out: u64) -> u64 {
        bits(self.in_tree)
            .filter(|&u| self.tree_degree(u) <= 1 && self.allowed[u] & out == 0)
            .fold(0, |m, u| m | bit(u))
    }

    fn feasible(&self, open: u64) -> bool {
        let out = self.all & !self.in_tree;
        // Every outside vertex must be reachable from an open tree vertex
        // through allowed edges among outside vertices.
        let mut reached = 0u64;
        for u in bits(open) {
            reached |= self.allowed[u] & out;
        }
        let mut frontier = reached;
        while frontier != 0 {
            let mut next = 0;
            for x in bits(frontier) {
                next |= self.allowed[x] & out;
            }
            next &= !reached;
            reached |= next;
            frontier = next;
        }
        if reached != out {
            return false;
        }

        // An outside vertex with a single possible neighbour y (outside, or
        // an open tree vertex) is a leaf of y in every completion.
        let mut forced = [0usize; MAX_VERTICES];
        for x in bits(out) {
            let options = self.allowed[x] & (out | open);
            if options.count_ones() == 1 {
                forced[options.trailing_zeros() as usize] += 1;
            }
        }
        match self.constraint {
            Constraint::MaxDegree(k) => {
                bits(open).all(|u| self.tree_degree(u) + forced[u] <= k)
                    && bits(out).all(|y| forced[y] < k)
                    && self.components_fit(open, out, k)
            }
            Constraint::MaxLeafDegree(k) => {
                let leaves = self.permanent_leaves(out);
                bits(self.in_tree).all(|u| (self.tree_adj[u] & leaves).count_ones() as usize + forced[u] <= k)
                    && bits(out).all(|y| forced[y] <= k)
            }
        }
    }

    /// Each component of the outside (under allowed edges) attaches to the
    /// tree through at least one edge, and distinct components use distinct
    /// free slots of open tree vertices. Checks that such an assignment
    /// exists with augmenting paths.
    fn components_fit(&self, open: u64, out: u64, k: usize) -> bool {
        let mut reach = [0u64; MAX_VERTICES];
        let mut count = 0;
        let mut left = out;
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = bit(start);
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for x in bits(frontier) {
                    next |= self.allowed[x] & out;
                }
                next &= !comp;
                comp |= next;
                frontier = next;
            }
            left &= !comp;
            reach[count] = bits(comp).fold(0, |m, x| m | self.allowed[x]) & open;
            count += 1;
        }
        let mut slots = [0usize; MAX_VERTICES];
        for u in bits(open) {
            slots[u] = k - self.tree_degree(u);
        }
        if count > bits(open).map(|u| slots[u]).sum::<usize>() {
            return false;
        }
        let mut owner = [usize::MAX; MAX_VERTICES];
        (0..count).all(|c| {
            let mut seen = 0u64;
            place(c, &reach[..count], &slots, &mut owner[..count], &mut seen)
        })
    }

    fn complete_tree_ok(&self) -> bool {
        match self.constraint {
            Constraint::MaxDegree(_) => true,
            Constraint::MaxLeafDegree(k) => {
                let n = self.g.n();
                if n <= 2 {
                    return n == 1 || k >= 1;
                }
                let leaves = bits(self.all)
                    .filter(|&u| self.tree_degree(u) == 1)
                    .fold(0u64, |m, u| m | bit(u));
                bits(self.all).all(|u| (self.tree_adj[u] & leaves).count_ones() as usize <= k)
            }
        }
    }

    fn search(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExceeded(self.max_nodes));
        }
        if self.in_tree == self.all {
            return Ok(self.complete_tree_ok());
        }
        let open = self.open();
        if !self.feasible(open) {
            return Ok(false);
        }
        let out = self.all & !self.in_tree;

        // Most constrained outside vertex: fewest parent options, preferring
        // vertices that cannot wait for a later parent, then fewest allowed
        // edges.
        let mut pick = None;
        let mut best = usize::MAX;
        for x in bits(out) {
            let parents = (self.allowed[x] & open).count_ones() as usize;
            if parents == 0 {
                continue;
            }
            let score = (2 * parents + usize::from(self.allowed[x] & out != 0)) * MAX_VERTICES
                + self.allowed[x].count_ones() as usize;
            if score < best {
                best = score;
                pick = Some(x);
            }
        }
        let Some(v) = pick else {
            return Ok(false);
        };

        let mut parents: Vec<usize> = bits(self.allowed[v] & open).collect();
        parents.sort_by_key(|&u| std::cmp::Reverse(self.added_at[u]));
        let time = self.in_tree.count_ones() as usize;
        for u in parents {
            self.in_tree |= bit(v);
            self.tree_adj[u] |= bit(v);
            self.tree_adj[v] = bit(u);
            self.added_at[v] = time;
            self.edges.push((u, v));
            if self.search()? {
                return Ok(true);
            }
            self.edges.pop();
            self.tree_adj[u] &= !bit(v);
            self.tree_adj[v] = 0;
            self.in_tree &= !bit(v);
        }

        if self.allowed[v] & out != 0 {
            // Swapping v with an outside twin (same allowed neighbourhood
            // apart from each other) is an automorphism fixing the partial
            // tree, so completions in which a twin hangs from the current
            // tree were covered by the parent branches above.
            let twins = bits(out)
                .filter(|&w| w == v || self.allowed[w] & !bit(v) == self.allowed[v] & !bit(w))
                .fold(0u64, |m, w| m | bit(w));
            let saved = self.allowed;
            for w in bits(twins) {
                let cut = self.allowed[w] & self.in_tree;
                self.allowed[w] &= !cut;
                for u in bits(cut) {
                    self.allowed[u] &= !bit(w);
                }
            }
            let found = self.search();
            self.allowed = saved;
            if found? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Orders above which the k-tree search first looks for a small cut with
/// too many components.
const CUT_FILTER_MIN_ORDER: usize = 10;
const CUT_FILTER_MAX_SIZE: usize = 3;

fn component_count(g: &Graph, within: u64) -> usize {
    let mut left = within;
    let mut count = 0;
    while left != 0 {
        left &= !g.reach(left.trailing_zeros() as usize, within);
        count += 1;
    }
    count
}

/// A tree `T` with maximum degree `k` has
/// `c(T - S) = sum of d_T over S - e_T(S) - |S| + 1 <= (k - 1)|S| + 1`, and
/// `c(G - S) <= c(T - S)` for a spanning tree of `G`. Any small `S` breaking
/// this bound rules the tree out.
fn k_tree_cut_obstruction(g: &Graph, k: usize) -> bool {
    let n = g.n();
    (1..=CUT_FILTER_MAX_SIZE.min(n - 1)).any(|size| {
        subsets_of_size(n, size).any(|s| component_count(g, g.vertex_mask() & !s) > (k - 1) * size + 1)
    })
}

/// Augmenting-path step of the component-to-slot assignment: component `c`
/// takes a free slot of some tree vertex in `reach[c]`, possibly displacing
/// another component that can move elsewhere.
fn place(c: usize, reach: &[u64], slots: &[usize], owner: &mut [usize], seen: &mut u64) -> bool {
    for u in bits(reach[c] & !*seen) {
        *seen |= bit(u);
        let load = owner.iter().filter(|&&o| o == u).count();
        if load < slots[u] {
            owner[c] = u;
            return true;
        }
        for d in 0..owner.len() {
            if owner[d] == u && place(d, reach, slots, owner, seen) {
                owner[c] = u;
                return true;
            }
        }
    }
    false
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// A spanning tree with maximum degree at most `k`, if one exists.
pub fn has_spanning_k_tree(g: &Graph, k: usize) -> Result<Option<TreeCertificate>> {
    has_spanning_k_tree_with_budget(g, k, SearchBudget::default())
}

pub fn has_spanning_k_tree_with_budget(
    g: &Graph,
    k: usize,
    budget: SearchBudget,
) -> Result<Option<TreeCertificate>> {
    require_connected(g)?;
    if k < 2 && g.n() > 2 {
        return Ok(None);
    }
    if g.n() == 1 {
        return Ok(Some(TreeCertificate::new(1, Vec::new())?));
    }
    if g.n() > CUT_FILTER_MIN_ORDER && k_tree_cut_obstruction(g, k) {
        return Ok(None);
    }
    let tree = TreeSearch::new(g, Constraint::MaxDegree(k), budget).run()?;
    if let Some(t) = &tree {
        assert!(t.is_spanning_tree_of(g) && t.max_degree() <= k);
    }
    Ok(tree)
}

/// A spanning tree with leaf degree at most `k`, if one exists.
pub fn has_spanning_tree_leaf_deg(g: &Graph, k: usize) -> Result<Option<TreeCertificate>> {
    has_spanning_tree_leaf_deg_with_budget(g, k, SearchBudget::default())
}

pub fn has_spanning_tree_leaf_deg_with_budget(
    g: &Graph,
    k: usize,
    budget: SearchBudget,
) -> Result<Option<TreeCertificate>> {
    require_connected(g)?;
    if g.n() == 1 {
        return Ok(Some(TreeCertificate::new(1, Vec::new())?));
    }
    let tree = TreeSearch::new(g, Constraint::MaxLeafDegree(k), budget).run()?;
    if let Some(t) = &tree {
        assert!(t.is_spanning_tree_of(g) && leaf_degree(t) <= k);
    }
    Ok(tree)
}

/// Minimum, over spanning trees, of the maximum degree, with a witness.
pub fn spanning_tree_min_max_degree(g: &Graph) -> Result<(usize, TreeCertificate)> {
    spanning_tree_min_max_degree_with_budget(g, SearchBudget::default())
}

pub fn spanning_tree_min_max_degree_with_budget(
    g: &Graph,
    budget: SearchBudget,
) -> Result<(usize, TreeCertificate)> {
    require_connected(g)?;
    let n = g.n();
    if n <= 2 {
        let edges = if n == 2 { vec![(0, 1)] } else { Vec::new() };
        return Ok((n - 1, TreeCertificate::new(n, edges)?));
    }
    let mut lo = 2;
    let mut hi = g.max_degree();
    let mut best = has_spanning_k_tree_with_budget(g, hi, budget)?
        .expect("a connected graph has a spanning tree within its maximum degree");
    while lo < hi {
        let mid = (lo + hi) / 2;
        match has_spanning_k_tree_with_budget(g, mid, budget)? {
            Some(t) => {
                hi = mid;
                best = t;
            }
            None => lo = mid + 1,
        }
    }
    Ok((best.max_degree().max(lo).min(hi), best))
}

/// A nonempty vertex set `S` with `i(G - S) >= (k + 1)|S|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetCertificate {
    pub s: VertexSet,
    pub isolated_after: usize,
}

impl SubsetCertificate {
    /// Recomputes `i(G - S)` and compares with the stored value.
    pub fn verify(&self, g: &Graph) -> bool {
        !self.s.is_empty()
            && g.delete_vertices(self.s).map(|h| h.isolated_count()).ok() == Some(self.isolated_after)
    }

    /// Whether the set violates `i(G - S) < (k + 1)|S|`.
    pub fn violates(&self, k: usize) -> bool {
        self.isolated_after >= (k + 1) * self.s.len()
    }
}

/// Outcome of the subset criterion for leaf-degree-bounded spanning trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KanekoVerdict {
    /// Every nonempty `S` satisfies `i(G - S) < (k + 1)|S|`.
    Holds,
    /// A minimum-cardinality violating set.
    Violated(SubsetCertificate),
}

impl KanekoVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, KanekoVerdict::Holds)
    }
}

/// Checks `i(G - S) < (k + 1)|S|` over all nonempty `S`, by increasing `|S|`.
pub fn kaneko_check(g: &Graph, k: usize) -> Result<KanekoVerdict> {
    kaneko_check_with_budget(g, k, SearchBudget::default())
}

pub fn kaneko_check_with_budget(g: &Graph, k: usize, budget: SearchBudget) -> Result<KanekoVerdict> {
    require_connected(g)?;
    let n = g.n();
    let mut examined = 0u64;
    // i(G - S) <= n - |S|, so only |S| <= n / (k + 2) can violate.
    for size in 1..=n / (k + 2) {
        for s in subsets_of_size(n, size) {
            examined += 1;
            if examined > budget.max_nodes {
                return Err(Error::BudgetExceeded(budget.max_nodes));
            }
            let isolated = bits(g.vertex_mask() & !s).filter(|&v| g.row(v) & !s == 0).count();
            if isolated >= (k + 1) * size {
                return Ok(KanekoVerdict::Violated(SubsetCertificate {
                    s: VertexSet::from_mask(s),
                    isolated_after: isolated,
                }));
            }
        }
    }
    Ok(KanekoVerdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn spider(legs: usize, len: usize) -> Graph {
        let mut edges = Vec::new();
        let mut next = 1;
        for _ in 0..legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::from_edges(next, &edges).unwrap()
    }

    fn tree_of(g: &Graph) -> TreeCertificate {
        TreeCertificate::new(g.n(), g.edges().collect()).unwrap()
    }

    #[test]
    fn certificate_validation() {
        assert!(TreeCertificate::new(3, vec![(0, 1)]).is_err());
        assert!(TreeCertificate::new(4, vec![(0, 1), (1, 2), (0, 2)]).is_err());
        assert!(TreeCertificate::new(3, vec![(0, 1), (0, 1)]).is_err());
        assert!(TreeCertificate::new(3, vec![(2, 1), (0, 1)]).is_ok());
    }

    #[test]
    fn leaf_degree_examples() {
        assert_eq!(leaf_degree(&tree_of(&Graph::star(4).unwrap())), 4);
        assert_eq!(leaf_degree(&tree_of(&Graph::path(5).unwrap())), 1);
        assert_eq!(leaf_degree(&tree_of(&spider(3, 2))), 1);
        assert_eq!(leaf_degree(&tree_of(&spider(3, 1))), 3);
        assert_eq!(leaf_degree(&tree_of(&Graph::complete(2).unwrap())), 1);
        assert_eq!(leaf_degree(&tree_of(&Graph::complete(1).unwrap())), 0);
    }

    #[test]
    fn k_tree_examples() {
        for n in 2..=12 {
            let p = Graph::path(n).unwrap();
            let t = has_spanning_k_tree(&p, 2).unwrap().unwrap();
            assert_eq!(t.edges(), tree_of(&p).edges());
        }
        let star = Graph::star(5).unwrap();
        assert!(has_spanning_k_tree(&star, 4).unwrap().is_none());
        assert_eq!(has_spanning_k_tree(&star, 5).unwrap().unwrap().max_degree(), 5);
        assert_eq!(has_spanning_k_tree(&Graph::empty(3).unwrap(), 2), Err(Error::Disconnected));
        assert!(has_spanning_k_tree(&Graph::petersen(), 2).unwrap().is_some());
    }

    #[test]
    fn extremal_ktree_family_has_no_k_tree() {
        for (n, m, k) in [(10, 1, 2), (12, 2, 2), (14, 1, 3), (14, 2, 2), (14, 1, 2), (13, 2, 3)] {
            let g = Family::ExKTree { n, m, k }.build().unwrap();
            assert!(has_spanning_k_tree(&g, k).unwrap().is_none(), "n={n} m={m} k={k}");
            assert!(has_spanning_k_tree(&g, k + 1).unwrap().is_some(), "n={n} m={m} k={k}");
        }
    }

    #[test]
    fn min_max_degree_examples() {
        let (d, t) = spanning_tree_min_max_degree(&Graph::circulant(9, 2).unwrap()).unwrap();
        assert_eq!(d, 2);
        assert_eq!(t.max_degree(), 2);
        let (d, _) = spanning_tree_min_max_degree(&Graph::star(4).unwrap()).unwrap();
        assert_eq!(d, 4);
        let fan = Family::ExFan { n: 10, k: 3 }.build().unwrap();
        let (d, t) = spanning_tree_min_max_degree(&fan).unwrap();
        assert_eq!(d, 4);
        assert!(t.is_spanning_tree_of(&fan));
        assert_eq!(spanning_tree_min_max_degree(&Graph::complete(2).unwrap()).unwrap().0, 1);
    }

    #[test]
    fn leaf_tree_examples() {
        // P_3 is the star K_{1,2}, whose centre carries two leaves.
        assert!(has_spanning_tree_leaf_deg(&Graph::path(3).unwrap(), 1).unwrap().is_none());
        for n in (2..=10).filter(|&n| n != 3) {
            let t = has_spanning_tree_leaf_deg(&Graph::path(n).unwrap(), 1).unwrap().unwrap();
            assert_eq!(leaf_degree(&t), 1);
        }
        let star = Graph::star(4).unwrap();
        assert!(has_spanning_tree_leaf_deg(&star, 4).unwrap().is_some());
        assert!(has_spanning_tree_leaf_deg(&star, 3).unwrap().is_none());
    }

    #[test]
    fn kaneko_examples() {
        match kaneko_check(&Graph::star(4).unwrap(), 3).unwrap() {
            KanekoVerdict::Violated(c) => {
                assert_eq!(c.s, VertexSet::from_iter([0]));
                assert_eq!(c.isolated_after, 4);
                assert!(c.verify(&Graph::star(4).unwrap()));
            }
            v => panic!("expected violation, got {v:?}"),
        }
        for n in 1..=12 {
            for k in 1..=3 {
                assert!(kaneko_check(&Graph::complete(n).unwrap(), k).unwrap().holds());
            }
        }
        for (n, delta, k) in [(11, 1, 1), (14, 1, 2), (20, 2, 1), (16, 2, 1)] {
            let g = Family::ExLeaf { n, delta, k }.build().unwrap();
            match kaneko_check(&g, k).unwrap() {
                KanekoVerdict::Violated(c) => {
                    assert_eq!(c.s, VertexSet::full(delta), "hub set");
                    assert_eq!(c.isolated_after, (k + 1) * delta);
                }
                v => panic!("expected violation, got {v:?}"),
            }
        }
    }

    #[test]
    fn cut_filter_matches_search() {
        for (n, m, k) in [(14, 1, 3), (14, 2, 2), (16, 1, 2), (12, 3, 2)] {
            let g = Family::ExKTree { n, m, k }.build().unwrap();
            assert!(k_tree_cut_obstruction(&g, k));
            let search = TreeSearch::new(&g, Constraint::MaxDegree(k), SearchBudget::default()).run().unwrap();
            assert!(search.is_none());
            assert!(!k_tree_cut_obstruction(&g, k + 1));
        }
        assert!(!k_tree_cut_obstruction(&Graph::path(12).unwrap(), 2));
    }

    #[test]
    fn budget_is_reported_distinctly() {
        let g = Family::ExKTree { n: 10, m: 2, k: 2 }.build().unwrap();
        let r = has_spanning_k_tree_with_budget(&g, 2, SearchBudget::nodes(3));
        assert_eq!(r, Err(Error::BudgetExceeded(3)));
    }
}
