//! Sequential vs. rayon scan over the same instance set. Build with
//! `--no-default-features` to see the fallback path under both labels.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use udim_core::generators::ExhaustiveMode;
use udim_core::scan::{conjecture_scan, exhaustive_instances, random_instances};
use udim_core::Execution;

fn scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("conjecture_scan");
    group.sample_size(10);
    let families = [
        ("exhaustive-3..8", exhaustive_instances(3..=8, ExhaustiveMode::Isomorphism).unwrap()),
        ("random-200-n11", random_instances(200, 11..=11, 1).unwrap()),
    ];
    for (name, instances) in &families {
        for exec in [Execution::Sequential, Execution::Parallel] {
            let label = format!("{exec:?}").to_lowercase();
            group.bench_with_input(BenchmarkId::new(*name, label), instances, |b, inst| {
                b.iter(|| conjecture_scan(black_box(inst), 12, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, scan);
criterion_main!(benches);
