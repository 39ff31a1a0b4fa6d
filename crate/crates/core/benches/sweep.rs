//! Benchmarks the verification sweeps: the feature-dispatched driver (data
//! parallel over the index range when the `parallel` feature is on, the
//! default) against the always-sequential baseline. Building with
//! `--no-default-features` makes both paths sequential.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use syzygy_core::pipeline::zclass;
use syzygy_core::verify::{sweep, sweep_seq};

fn zclass_flags(i: u32) -> bool {
    zclass(i).map(|r| r.flags.all_ok()).unwrap_or(false)
}

fn bench_pipeline_sweep(c: &mut Criterion) {
    let indices: Vec<u32> = (0..=4).collect();
    let mut group = c.benchmark_group("zclass_sweep");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| sweep_seq(black_box(indices.clone()), zclass_flags))
    });
    group.bench_function("dispatched", |b| {
        b.iter(|| sweep(black_box(indices.clone()), zclass_flags))
    });
    group.finish();
}

fn bench_cycle_oracles(c: &mut Criterion) {
    let ks: Vec<u32> = (5..=16).collect();
    let check = |k: u32| -> bool {
        syzygy_core::cycles::class_x_porteous(k).unwrap() == syzygy_core::cycles::class_x(k)
    };
    let mut group = c.benchmark_group("porteous_sweep");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| sweep_seq(black_box(ks.clone()), check))
    });
    group.bench_function("dispatched", |b| {
        b.iter(|| sweep(black_box(ks.clone()), check))
    });
    group.finish();
}

criterion_group!(benches, bench_pipeline_sweep, bench_cycle_oracles);
criterion_main!(benches);
