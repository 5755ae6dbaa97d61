//! Sequential vs. rayon batch classification of random symmetric matrices.
//!
//! Run with `cargo bench -p eigenstrata`; the `parallel` case needs the
//! default `parallel` feature.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use eigenstrata::batch;
use eigenstrata::spectral::SymmetricMatrix;

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> SymmetricMatrix {
    let mut rows = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.random_range(-1.0..1.0);
            rows[i][j] = v;
            rows[j][i] = v;
        }
    }
    SymmetricMatrix::from_rows(&rows).unwrap()
}

fn bench_batch(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut group = c.benchmark_group("eigen_configurations");
    for &(count, order) in &[(256usize, 8usize), (64, 24)] {
        let matrices: Vec<SymmetricMatrix> = (0..count)
            .map(|_| random_symmetric(&mut rng, order))
            .collect();
        let label = format!("{count}x{order}");
        group.bench_with_input(BenchmarkId::new("sequential", &label), &matrices, |b, m| {
            b.iter(|| batch::eigen_configurations_seq(m, 1e-8))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("rayon", &label), &matrices, |b, m| {
            b.iter(|| batch::eigen_configurations(m, 1e-8))
        });
    }
    group.finish();
}

fn bench_single_solve(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut group = c.benchmark_group("jacobi_eigen");
    for &n in &[4usize, 16, 64] {
        let q = random_symmetric(&mut rng, n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &q, |b, q| {
            b.iter(|| eigenstrata::spectral::jacobi_eigen(q).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_batch, bench_single_solve);
criterion_main!(benches);
