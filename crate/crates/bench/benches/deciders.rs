use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use spanfactor::verify::{verify, GraphSource, TheoremId, TheoremSpec};
use spanfactor::{
    count_cliques, has_k_factor, has_one_factor, has_spanning_k_tree, has_spanning_tree_leaf_deg, kaneko_check,
    l_closure, quotient_rho, spectral_radius, ClosureIndex, Family, ThresholdQuery, DEFAULT_TOL,
};
use spanfactor_bench::{connected_graphs, extremal_with_augmentations, random_graphs};

fn matching(c: &mut Criterion) {
    let graphs = random_graphs(40, 0.1, 200, 1);
    c.bench_function("blossom n=40", |b| {
        b.iter(|| graphs.iter().filter(|g| has_one_factor(black_box(g)).is_some()).count())
    });
    let small = random_graphs(16, 0.4, 200, 2);
    for k in [2, 3] {
        c.bench_function(&format!("gadget k={k} n=16"), |b| {
            b.iter(|| small.iter().filter(|g| has_k_factor(black_box(g), k).is_some()).count())
        });
    }
}

fn closure(c: &mut Criterion) {
    let graphs = random_graphs(32, 0.5, 200, 3);
    c.bench_function("closure l=n-1 n=32", |b| {
        b.iter(|| graphs.iter().map(|g| l_closure(black_box(g), ClosureIndex::one_factor(32)).edge_count()).sum::<usize>())
    });
}

fn spectral(c: &mut Criterion) {
    let graphs = connected_graphs(30, 0.3, 100, 4);
    c.bench_function("power iteration n=30", |b| {
        b.iter(|| graphs.iter().map(|g| spectral_radius(black_box(g), DEFAULT_TOL).unwrap()).sum::<f64>())
    });
    c.bench_function("quotient root grid", |b| {
        b.iter(|| {
            let mut s = 0.0;
            for a in 1..=4 {
                for bb in 1..=20 {
                    for cc in 0..=12 {
                        s += quotient_rho(a, bb, cc).unwrap().rho;
                    }
                }
            }
            s
        })
    });
}

fn trees(c: &mut Criterion) {
    let graphs = connected_graphs(14, 0.3, 100, 5);
    c.bench_function("spanning 2-tree n=14", |b| {
        b.iter(|| graphs.iter().filter(|g| has_spanning_k_tree(black_box(g), 2).unwrap().is_some()).count())
    });
    c.bench_function("leaf degree 1 n=14", |b| {
        b.iter(|| graphs.iter().filter(|g| has_spanning_tree_leaf_deg(black_box(g), 1).unwrap().is_some()).count())
    });
    c.bench_function("subset criterion k=1 n=14", |b| {
        b.iter(|| graphs.iter().filter(|g| kaneko_check(black_box(g), 1).unwrap().holds()).count())
    });
    let ex = extremal_with_augmentations(Family::ExKTree { n: 16, m: 1, k: 2 });
    c.bench_function("EX_KTREE(16,1,2) augmentations", |b| {
        b.iter(|| ex.iter().filter(|g| has_spanning_k_tree(black_box(g), 2).unwrap().is_some()).count())
    });
}

fn cliques(c: &mut Criterion) {
    let graphs = random_graphs(24, 0.5, 100, 6);
    for r in [3, 4] {
        c.bench_function(&format!("clique count r={r} n=24"), |b| {
            b.iter(|| graphs.iter().map(|g| count_cliques(black_box(g), r)).sum::<u128>())
        });
    }
}

fn harness(c: &mut Criterion) {
    let spec = TheoremSpec::new(TheoremId::EqT12, ThresholdQuery { n: 6, k: 2, ..ThresholdQuery::default() }).unwrap();
    let mut group = c.benchmark_group("harness");
    group.sample_size(10);
    group.bench_function("EQ-T12 exhaustive n=6", |b| b.iter(|| verify(&spec, &GraphSource::Exhaustive).unwrap()));
    group.finish();
}

criterion_group!(benches, matching, closure, spectral, trees, cliques, harness);
criterion_main!(benches);
