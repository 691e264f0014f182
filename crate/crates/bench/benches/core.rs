use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use twohop_core::invariants::qstab_vertices;
use twohop_core::perf::{beta_bounds, t1_star, LowerSearch};
use twohop_core::schedule::fractional_chromatic;
use twohop_core::{conflict_graph, generate, q, AdjGraph, Caps, DemandVector, Family};

fn rings(c: &mut Criterion) {
    let caps = Caps::default();
    let mut group = c.benchmark_group("ring_chif");
    for n in [10, 14, 18, 22] {
        let g = generate(&Family::Cycle(n)).unwrap();
        let gc = conflict_graph(&g, 2).unwrap();
        let tau = DemandVector::uniform(g.links(), q(1, 5));
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| fractional_chromatic(black_box(&gc), &tau, &caps).unwrap())
        });
    }
    group.finish();
}

fn conflict_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("conflict_graph");
    for n in [16, 32, 64] {
        let g = generate(&Family::Circulant(n, vec![1, 3])).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| conflict_graph(black_box(g), 2).unwrap())
        });
    }
    group.finish();
}

fn local_estimate(c: &mut Criterion) {
    let caps = Caps::default();
    let g = generate(&Family::CliquePendant(6)).unwrap();
    let tau = DemandVector::uniform(g.links(), q(1, 4));
    c.bench_function("t1_star/clique_pendant_6", |b| {
        b.iter(|| t1_star(black_box(&g), &tau, &caps).unwrap())
    });
}

fn polytope(c: &mut Criterion) {
    let caps = Caps::default();
    let mut group = c.benchmark_group("qstab_vertices");
    for n in [5, 7, 9] {
        let h = AdjGraph::cycle(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &h, |b, h| {
            b.iter(|| qstab_vertices(black_box(h), &caps).unwrap())
        });
    }
    group.finish();
}

fn beta(c: &mut Criterion) {
    let caps = Caps::default();
    let g = generate(&Family::Cycle(14)).unwrap();
    c.bench_function("beta_bounds/cycle_14", |b| {
        b.iter(|| beta_bounds(black_box(&g), &LowerSearch::default(), &caps).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = rings, conflict_build, local_estimate, polytope, beta
}
criterion_main!(benches);
