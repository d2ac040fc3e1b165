//! Fixed, seeded workloads shared by the benchmarks.

use spanfactor::verify::sample_random;
use spanfactor::{Family, Graph};

/// `count` seeded `G(n, p)` samples.
pub fn random_graphs(n: usize, p: f64, count: usize, seed: u64) -> Vec<Graph> {
    sample_random(n, p, count, seed).expect("valid sampling parameters").collect()
}

/// Connected samples only, drawn from the same stream until `count` are found.
pub fn connected_graphs(n: usize, p: f64, count: usize, seed: u64) -> Vec<Graph> {
    let mut out = Vec::with_capacity(count);
    let mut round = 0;
    while out.len() < count {
        out.extend(random_graphs(n, p, count, seed + round).into_iter().filter(Graph::is_connected));
        round += 1;
    }
    out.truncate(count);
    out
}

/// Extremal graphs and their one-edge augmentations.
pub fn extremal_with_augmentations(family: Family) -> Vec<Graph> {
    let g = family.build().expect("valid family parameters");
    let mut out = vec![g.clone()];
    out.extend(g.non_edges().map(|(u, v)| g.with_edge(u, v)));
    out
}
