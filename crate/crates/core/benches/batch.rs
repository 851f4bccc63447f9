//! Compares the data-parallel batch driver against the sequential
//! fallback on a fixed batch of random boards.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use monocycle::batch::{batch_solve, batch_solve_sequential};
use monocycle::gen::gen_random;
use monocycle::Colouring;

fn fixture(n: usize, count: usize) -> Vec<Colouring> {
    (0..count as u64).map(|s| gen_random(n, 0x6e5c_1000 + s, 0.5).unwrap()).collect()
}

fn bench_batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("batch_solve");
    for &(n, count) in &[(16usize, 64usize), (64, 32), (256, 8)] {
        let cs = fixture(n, count);
        group.bench_with_input(
            BenchmarkId::new("sequential", format!("n{n}x{count}")),
            &cs,
            |b, cs| b.iter(|| batch_solve_sequential(cs).unwrap()),
        );
        group.bench_with_input(
            BenchmarkId::new("parallel", format!("n{n}x{count}")),
            &cs,
            |b, cs| b.iter(|| batch_solve(cs, num_cpus()).unwrap()),
        );
    }
    group.finish();
}

fn num_cpus() -> usize {
    std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
}

criterion_group!(benches, bench_batch);
criterion_main!(benches);
