//! Benchmarks for the hot paths: sequence decomposition, lattice
//! enumeration, S-block poset construction, meets and joins, and the
//! exhaustive graph sweep.

use amphora_core::{
    block_lattice, build_sblock_poset, decompose, enumerate_dis, verify_theorems, Block, Partition,
};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn bench_decompose(c: &mut Criterion) {
    // A steep head over a long unit tail: mark lands mid-sequence.
    let parts: Vec<u32> = (1..=20)
        .rev()
        .chain(std::iter::repeat(1).take(100))
        .collect();
    let pi = Partition::new(parts).expect("non-increasing positive parts");
    c.bench_function("decompose/120-rows", |b| {
        b.iter(|| decompose(black_box(&pi)))
    });
}

fn bench_enumerate_dis(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate-dis");
    g.sample_size(10);
    g.bench_function("n-25", |b| b.iter(|| enumerate_dis(black_box(25))));
    g.finish();
}

fn bench_sblock_poset(c: &mut Criterion) {
    let mut g = c.benchmark_group("sblock-poset");
    g.sample_size(10);
    g.bench_function("n-18", |b| {
        b.iter(|| build_sblock_poset(black_box(18)).expect("weight 18 has S-blocks"))
    });
    g.finish();
}

fn bench_meet_join(c: &mut Criterion) {
    let lat = block_lattice(24).expect("weight 24 has S-blocks");
    let b1: Block = "12,8,3,1|12,8,3,1".parse().expect("valid block");
    let b2: Block = "9,7,5,2,1|9,7,5,2,1".parse().expect("valid block");
    c.bench_function("meet-join/n-24", |b| {
        b.iter(|| {
            let meet = lat
                .meet(black_box(&b1), black_box(&b2))
                .expect("same weight");
            let join = lat
                .join(black_box(&b1), black_box(&b2))
                .expect("same weight");
            (meet, join)
        })
    });
}

fn bench_graph_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("graph-sweep");
    g.sample_size(10);
    g.bench_function("v-5", |b| b.iter(|| verify_theorems(black_box(5))));
    g.finish();
}

criterion_group!(
    benches,
    bench_decompose,
    bench_enumerate_dis,
    bench_sblock_poset,
    bench_meet_join,
    bench_graph_sweep
);
criterion_main!(benches);
