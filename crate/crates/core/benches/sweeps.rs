//! Sequential (one worker) against the default pool on the heavier sweeps.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use lattice_harmonics::basis::basis_b_mu;
use lattice_harmonics::par;
use lattice_harmonics::shapes::Partition;
use lattice_harmonics::spans::y_free_of;
use lattice_harmonics::symfunc::{graded_frobenius, CharacterTable};
use lattice_harmonics::verify::{run_suite, Suite, VerifyConfig};

fn workers() -> Vec<(&'static str, usize)> {
    vec![("sequential", 1), ("parallel", par::available_threads().max(2))]
}

fn sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("sweeps");
    g.sample_size(10);
    let mu: Partition = "3,2,1".parse().unwrap();
    for (name, threads) in workers() {
        g.bench_with_input(BenchmarkId::new("basis_b_mu 3,2,1", name), &threads, |b, &t| {
            b.iter(|| par::with_threads(t, || basis_b_mu(black_box(&mu)).unwrap().rank().unwrap()))
        });
        g.bench_with_input(BenchmarkId::new("frobenius 2,2,1", name), &threads, |b, &t| {
            let nu: Partition = "2,2,1".parse().unwrap();
            let space = y_free_of(&nu, None).unwrap();
            b.iter(|| par::with_threads(t, || graded_frobenius(black_box(&space)).unwrap()))
        });
        g.bench_with_input(BenchmarkId::new("characters n=8", name), &threads, |b, &t| {
            b.iter(|| par::with_threads(t, || CharacterTable::new(black_box(8))))
        });
        g.bench_with_input(BenchmarkId::new("verify recurrence n<=5", name), &threads, |b, &t| {
            b.iter(|| par::with_threads(t, || run_suite(Suite::Recurrence, &VerifyConfig::new(5)).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
