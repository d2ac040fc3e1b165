//! Graph streams: every labeled graph on `n <= 8` vertices, or seeded
//! Erdős–Rényi samples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

/// Largest order for exhaustive labeled enumeration (2^28 masks at n = 8).
pub const EXHAUSTIVE_MAX_ORDER: usize = 8;

/// Cheap structural filters applied during enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Filters {
    pub connected: bool,
    pub min_degree: usize,
    /// Yield nothing unless `n * k` is even.
    pub nk_even: Option<usize>,
    /// Skip masks with fewer edges, before the graph is built.
    pub min_edges: usize,
}

impl Filters {
    pub fn none() -> Self {
        Filters::default()
    }

    pub fn connected() -> Self {
        Filters { connected: true, ..Filters::default() }
    }

    pub fn min_degree(d: usize) -> Self {
        Filters { min_degree: d, ..Filters::default() }
    }

    fn accepts(&self, g: &Graph) -> bool {
        g.min_degree() >= self.min_degree && (!self.connected || g.is_connected())
    }
}

/// Edge slots in graph6 (column-major upper triangle) order.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

fn from_mask(n: usize, pairs: &[(usize, usize)], mut mask: u64) -> Graph {
    let mut rows = [0u64; MAX_VERTICES];
    while mask != 0 {
        let (u, v) = pairs[mask.trailing_zeros() as usize];
        rows[u] |= bit(v);
        rows[v] |= bit(u);
        mask &= mask - 1;
    }
    Graph::from_rows(n, &rows)
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > EXHAUSTIVE_MAX_ORDER {
        return Err(Error::TooLarge(format!(
            "exhaustive enumeration supports 1 <= n <= {EXHAUSTIVE_MAX_ORDER}, got {n}"
        )));
    }
    Ok(())
}

fn skip_all(n: usize, filters: &Filters) -> bool {
    filters.nk_even.is_some_and(|k| (n * k) % 2 == 1)
}

/// Every labeled graph on `n` vertices passing `filters`, each exactly once,
/// in increasing order of the graph6 edge-bit mask.
pub fn enumerate_labeled(n: usize, filters: Filters) -> Result<impl Iterator<Item = Graph>> {
    check_order(n)?;
    let pairs = pairs(n);
    let total: u64 = if skip_all(n, &filters) { 0 } else { 1 << pairs.len() };
    Ok((0..total).filter_map(move |mask| {
        if (mask.count_ones() as usize) < filters.min_edges {
            return None;
        }
        let g = from_mask(n, &pairs, mask);
        filters.accepts(&g).then_some(g)
    }))
}

const CHUNK_BITS: u32 = 16;

/// Parallel fold over the same stream as [`enumerate_labeled`]. Chunks of
/// consecutive masks are folded independently and then combined with
/// `reduce`, which must be associative.
pub fn fold_labeled<T, I, F, R>(n: usize, filters: Filters, identity: I, fold: F, reduce: R) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, &Graph) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    check_order(n)?;
    let pairs = pairs(n);
    if skip_all(n, &filters) {
        return Ok(identity());
    }
    let bits_total = pairs.len() as u32;
    let chunk_bits = CHUNK_BITS.min(bits_total);
    let chunks: u64 = 1 << (bits_total - chunk_bits);
    Ok((0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c << chunk_bits;
            let mut acc = identity();
            for mask in start..start + (1 << chunk_bits) {
                if (mask.count_ones() as usize) < filters.min_edges {
                    continue;
                }
                let g = from_mask(n, &pairs, mask);
                if filters.accepts(&g) {
                    acc = fold(acc, &g);
                }
            }
            acc
        })
        .reduce(&identity, &reduce))
}

/// `count` independent `G(n, p)` samples from a ChaCha8 stream seeded with `seed`.
pub fn sample_random(n: usize, p: f64, count: usize, seed: u64) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Range(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count).map(move |_| {
        let mut rows = [0u64; MAX_VERTICES];
        for v in 1..n {
            for u in 0..v {
                if rng.gen_bool(p) {
                    rows[u] |= bit(v);
                    rows[v] |= bit(u);
                }
            }
        }
        Graph::from_rows(n, &rows)
    }))
}
