//! Exact vertex connectivity.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// Largest order handled by cut enumeration; bigger graphs use disjoint paths.
pub const BRUTE_FORCE_MAX_ORDER: usize = 16;

/// Size of a minimum vertex cut, or `n - 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    if g.n() < 2 {
        return Err(Error::Range("vertex connectivity needs at least 2 vertices".into()));
    }
    if g.n() <= BRUTE_FORCE_MAX_ORDER {
        Ok(connectivity_by_cuts(g))
    } else {
        Ok(connectivity_by_paths(g))
    }
}

/// Whether no set of fewer than `m` vertices disconnects `g` (and `n > m`).
pub fn is_m_connected(g: &Graph, m: usize) -> bool {
    if m == 0 {
        return true;
    }
    if g.n() <= m {
        return false;
    }
    if !g.is_connected() {
        return false;
    }
    if g.min_degree() < m {
        return false;
    }
    if g.is_complete() {
        return true;
    }
    smallest_cut_below(g, m).is_none()
}

/// Smallest vertex cut of size `< limit`, searched by increasing size.
fn smallest_cut_below(g: &Graph, limit: usize) -> Option<u64> {
    let all = g.vertex_mask();
    if !g.is_connected() {
        return Some(0);
    }
    for size in 1..limit.min(g.n() - 1) {
        let found = subsets_of_size(g.n(), size).find(|&s| !g.is_connected_within(all & !s));
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Exhaustive cut enumeration over subsets smaller than `δ(G)`.
pub fn connectivity_by_cuts(g: &Graph) -> usize {
    if g.is_complete() {
        return g.n() - 1;
    }
    let delta = g.min_degree();
    smallest_cut_below(g, delta).map_or(delta, |s| s.count_ones() as usize)
}

/// Menger route: minimum over non-adjacent pairs of the maximum number of
/// internally vertex-disjoint paths, restricted to pairs whose first vertex
/// is among the first `κ + 1` vertices.
pub fn connectivity_by_paths(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n - 1;
    }
    let mut best = g.min_degree();
    let mut i = 0;
    while i <= best && i < n {
        for j in bits(!g.row(i) & g.vertex_mask() & !((bit(i) << 1) - 1)) {
            best = best.min(disjoint_paths(g, i, j, best));
        }
        i += 1;
    }
    best
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths (s, t
/// non-adjacent), stopping early once `cap` paths are found.
fn disjoint_paths(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    // Vertex v splits into v_in = 2v and v_out = 2v + 1.
    let n = g.n();
    let nodes = 2 * n;
    let mut head: Vec<usize> = Vec::new();
    let mut cap_left: Vec<u8> = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    let mut add = |a: usize, b: usize, c: u8, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(head.len());
        head.push(b);
        cap_left.push(c);
        adj[b].push(head.len());
        head.push(a);
        cap_left.push(0);
    };
    for v in 0..n {
        let c = if v == s || v == t { 2 } else { 1 };
        add(2 * v, 2 * v + 1, c, &mut adj);
    }
    for (u, v) in g.edges() {
        add(2 * u + 1, 2 * v, 1, &mut adj);
        add(2 * v + 1, 2 * u, 1, &mut adj);
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    let mut via = vec![usize::MAX; nodes];
    while flow < cap {
        via.iter_mut().for_each(|e| *e = usize::MAX);
        let mut queue = VecDeque::from([source]);
        let mut seen = vec![false; nodes];
        seen[source] = true;
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for &e in &adj[x] {
                let y = head[e];
                if cap_left[e] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = e;
                    queue.push_back(y);
                }
            }
        }
        if !seen[sink] {
            break;
        }
        let mut x = sink;
        while x != source {
            let e = via[x];
            cap_left[e] -= 1;
            cap_left[e ^ 1] += 1;
            x = head[e ^ 1];
        }
        flow += 1;
    }
    flow
}

/// All `size`-subsets of `0..n` as masks, in Gosper order.
pub(crate) fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { u128::MAX } else { 1u128 << n };
    let mut next: Option<u64> = match size {
        0 => Some(0),
        s if s > n => None,
        s => Some(if s == 64 { u64::MAX } else { (1u64 << s) - 1 }),
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur as u128 + c as u128;
            if r >= limit {
                None
            } else {
                let r = r as u64;
                Some((((r ^ cur) >> 2) / c) | r)
            }
        };
        Some(cur)
    })
}
