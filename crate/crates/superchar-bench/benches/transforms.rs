use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use superchar::transforms::{dct_matrix, dft_matrix, dst_matrix};

fn transform_generation(c: &mut Criterion) {
    let mut group = c.benchmark_group("transform-generation");
    group.sample_size(10);
    for n in [64u64, 256, 1024] {
        group.bench_with_input(BenchmarkId::new("dft", n), &n, |b, &n| {
            b.iter(|| dft_matrix(n))
        });
        group.bench_with_input(BenchmarkId::new("dct", n), &n, |b, &n| {
            b.iter(|| dct_matrix(n))
        });
        group.bench_with_input(BenchmarkId::new("dst", n), &n, |b, &n| {
            b.iter(|| dst_matrix(n))
        });
    }
    group.finish();
}

criterion_group!(benches, transform_generation);
criterion_main!(benches);
