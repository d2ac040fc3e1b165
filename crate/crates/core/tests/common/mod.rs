//! Independent brute-force oracles used by the integration and acceptance
//! tests. Nothing here calls the decider being checked.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use spanfactor::Graph;

fn low(mask: u64) -> usize {
    mask.trailing_zeros() as usize
}

/// Perfect matching existence by matching the lowest free vertex every way.
pub fn has_perfect_matching(g: &Graph) -> bool {
    fn rec(g: &Graph, free: u64) -> bool {
        if free == 0 {
            return true;
        }
        let v = low(free);
        let mut cand = g.row(v) & free;
        while cand != 0 {
            let u = low(cand);
            cand &= cand - 1;
            if rec(g, free & !(1 << v) & !(1 << u)) {
                return true;
            }
        }
        false
    }
    g.n() % 2 == 0 && rec(g, g.vertex_mask())
}

/// Maximum matching size: each vertex is either skipped or matched to a
/// free neighbour.
pub fn max_matching_size(g: &Graph) -> usize {
    fn rec(g: &Graph, free: u64) -> usize {
        if free == 0 {
            return 0;
        }
        let v = low(free);
        let rest = free & !(1 << v);
        let mut best = rec(g, rest);
        let mut cand = g.row(v) & rest;
        while cand != 0 {
            let u = low(cand);
            cand &= cand - 1;
            best = best.max(1 + rec(g, rest & !(1 << u)));
        }
        best
    }
    rec(g, g.vertex_mask())
}

/// Whether `g` has a Hamilton path, by subset dynamic programming over path
/// endpoints (n <= 20).
pub fn has_hamilton_path(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 20);
    if n == 1 {
        return true;
    }
    let full = (1usize << n) - 1;
    // ends[S]: vertices v such that some path covers exactly S and ends at v.
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for s in 1..=full {
        let e = ends[s];
        if e == 0 {
            continue;
        }
        let mut ext = 0u64;
        let mut m = e as u64;
        while m != 0 {
            ext |= g.row(low(m));
            m &= m - 1;
        }
        ext &= !(s as u64);
        while ext != 0 {
            let w = low(ext);
            ext &= ext - 1;
            ends[s | 1 << w] |= 1 << w;
        }
    }
    ends[full] != 0
}

/// `N_r` by testing every r-subset.
pub fn brute_force_cliques(g: &Graph, r: usize) -> u128 {
    let n = g.n();
    let mut count = 0;
    let mut idx: Vec<usize> = (0..r).collect();
    if r > n {
        return 0;
    }
    if r == 0 {
        return 1;
    }
    loop {
        let clique = (0..r).all(|i| (i + 1..r).all(|j| g.has_edge(idx[i], idx[j])));
        if clique {
            count += 1;
        }
        let mut i = r;
        loop {
            if i == 0 {
                return count;
            }
            i -= 1;
            if idx[i] < n - r + i {
                idx[i] += 1;
                for j in i + 1..r {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The l-closure built by adding a uniformly random qualifying pair at a time.
pub fn random_order_closure<R: Rng>(g: &Graph, l: usize, rng: &mut R) -> Graph {
    let mut h = g.clone();
    loop {
        let pairs: Vec<_> = h.non_edges().filter(|&(u, v)| h.degree(u) + h.degree(v) >= l).collect();
        match pairs.choose(rng) {
            Some(&(u, v)) => h = h.with_edge(u, v),
            None => return h,
        }
    }
}

/// Number of odd components of `g - s`.
pub fn odd_components_after(g: &Graph, s: &[usize]) -> usize {
    component_sizes_after(g, s).into_iter().filter(|c| c % 2 == 1).count()
}

/// Number of components of `g - s`.
pub fn components_after(g: &Graph, s: &[usize]) -> usize {
    component_sizes_after(g, s).len()
}

fn component_sizes_after(g: &Graph, s: &[usize]) -> Vec<usize> {
    let keep: Vec<usize> = (0..g.n()).filter(|v| !s.contains(v)).collect();
    let mut seen = vec![false; g.n()];
    let mut sizes = Vec::new();
    for &start in &keep {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        seen[start] = true;
        let mut size = 0;
        while let Some(v) = stack.pop() {
            size += 1;
            for &u in &keep {
                if !seen[u] && g.has_edge(u, v) {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

/// Every spanning tree of `g`, as edge lists, by testing every `(n-1)`-edge
/// subset for acyclicity with union-find.
pub fn all_spanning_trees(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let edges: Vec<_> = g.edges().collect();
    let mut out = Vec::new();
    if n == 1 {
        out.push(Vec::new());
        return out;
    }
    let want = n - 1;
    let e = edges.len();
    if e < want {
        return out;
    }
    let mut idx: Vec<usize> = (0..want).collect();
    loop {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut acyclic = true;
        for &i in &idx {
            let (u, v) = edges[i];
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                acyclic = false;
                break;
            }
            parent[a] = b;
        }
        if acyclic {
            out.push(idx.iter().map(|&i| edges[i]).collect());
        }
        let mut i = want;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < e - want + i {
                idx[i] += 1;
                for j in i + 1..want {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn tree_degrees(n: usize, tree: &[(usize, usize)]) -> Vec<usize> {
    let mut d = vec![0; n];
    for &(u, v) in tree {
        d[u] += 1;
        d[v] += 1;
    }
    d
}

/// Leaf degree of an edge-list tree, with the one-edge tree counted as 1.
pub fn tree_leaf_degree(n: usize, tree: &[(usize, usize)]) -> usize {
    let d = tree_degrees(n, tree);
    let mut count = vec![0; n];
    for &(u, v) in tree {
        if d[v] == 1 {
            count[u] += 1;
        }
        if d[u] == 1 {
            count[v] += 1;
        }
    }
    count.into_iter().max().unwrap_or(0)
}

/// `i(G - S) < (k+1)|S|` for every nonempty `S`, over all `2^n` subsets.
pub fn subset_criterion(g: &Graph, k: usize) -> bool {
    let n = g.n();
    (1u64..1 << n).all(|s| {
        let isolated = (0..n).filter(|&v| s & (1 << v) == 0 && g.row(v) & !s == 0).count();
        isolated < (k + 1) * s.count_ones() as usize
    })
}

/// Minimum vertex cut size by trying all vertex subsets (complete graphs
/// give `n - 1`).
pub fn brute_force_connectivity(g: &Graph) -> usize {
    let n = g.n();
    let mut best = n - 1;
    for s in 0u64..1 << n {
        let size = s.count_ones() as usize;
        if size >= best || size + 2 > n {
            continue;
        }
        let removed: Vec<usize> = (0..n).filter(|&v| s & (1 << v) != 0).collect();
        let h = g.delete_vertices(removed.into_iter().collect()).unwrap();
        if !h.is_connected() {
            best = size;
        }
    }
    best
}

/// Whether some subset of edges is k-regular and spanning, via recursion on
/// the lowest vertex still short of degree k.
pub fn has_k_factor_oracle(g: &Graph, k: usize) -> bool {
    fn rec(g: &Graph, need: &mut [usize], avail: &mut [u64]) -> bool {
        let Some(v) = (0..need.len()).find(|&v| need[v] > 0) else {
            return true;
        };
        // v must take `need[v]` more edges from its remaining options.
        let options: Vec<usize> = (0..need.len())
            .filter(|&u| avail[v] & (1 << u) != 0 && need[u] > 0)
            .collect();
        if options.len() < need[v] {
            return false;
        }
        let u = options[0];
        avail[v] &= !(1 << u);
        avail[u] &= !(1 << v);
        // Take the edge vu.
        need[v] -= 1;
        need[u] -= 1;
        let took = rec(g, need, avail);
        need[v] += 1;
        need[u] += 1;
        // Or leave it out for good.
        let left = !took && rec(g, need, avail);
        avail[v] |= 1 << u;
        avail[u] |= 1 << v;
        took || left
    }
    let n = g.n();
    let mut need = vec![k; n];
    let mut avail: Vec<u64> = (0..n).map(|v| g.row(v)).collect();
    rec(g, &mut need, &mut avail)
}
