//! Graph isomorphism for small graphs: colour refinement, then backtracking.

use std::collections::BTreeMap;

use crate::graph::{bit, bits, Graph};

/// Jointly refines vertex colours of both graphs (starting from degrees)
/// until the partition is stable. Returns `None` as soon as the colour
/// histograms differ.
fn refine(g1: &Graph, g2: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut c1 = g1.degrees();
    let mut c2 = g2.degrees();
    let mut classes = 0;
    loop {
        let mut h1 = c1.clone();
        let mut h2 = c2.clone();
        h1.sort_unstable();
        h2.sort_unstable();
        if h1 != h2 {
            return None;
        }
        h1.dedup();
        if h1.len() == classes {
            return Some((c1, c2));
        }
        classes = h1.len();

        let signature = |g: &Graph, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = bits(g.row(v)).map(|u| c[u]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let mut ids: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let s1: Vec<_> = (0..g1.n()).map(|v| signature(g1, &c1, v)).collect();
        let s2: Vec<_> = (0..g2.n()).map(|v| signature(g2, &c2, v)).collect();
        for s in s1.iter().chain(&s2) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        c1 = s1.iter().map(|s| ids[s]).collect();
        c2 = s2.iter().map(|s| ids[s]).collect();
    }
}

/// Whether an adjacency-preserving bijection exists between `g1` and `g2`.
///
/// Intended for graphs up to about a dozen vertices, or larger graphs whose
/// colour refinement leaves only a few large homogeneous classes (such as
/// the joins of cliques and independent sets used throughout this crate).
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let Some((c1, c2)) = refine(g1, g2) else {
        return false;
    };
    // Map the smallest colour classes first.
    let mut size = BTreeMap::new();
    for &c in &c1 {
        *size.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = (0..g1.n()).collect();
    order.sort_by_key(|&v| (size[&c1[v]], c1[v], v));
    let mut image = vec![usize::MAX; g1.n()];
    extend(g1, g2, &c1, &c2, &order, 0, &mut image, 0)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &Graph,
    g2: &Graph,
    c1: &[usize],
    c2: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for v in bits(g2.vertex_mask() & !used) {
        if c2[v] != c1[u] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| g1.has_edge(u, w) == g2.has_edge(v, image[w]));
        if consistent {
            image[u] = v;
            if extend(g1, g2, c1, c2, order, depth + 1, image, used | bit(v)) {
                return true;
            }
        }
    }
    image[u] = usize::MAX;
    false
}
