//! Shared helpers for the integration suites: seeded random matrices and
//! random orthogonal frames built from plane rotations.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use eigenstrata::spectral::{SquareMatrix, SymmetricMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> SymmetricMatrix {
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

/// Product of `2n` random plane rotations: numerically orthogonal.
pub fn random_orthogonal(rng: &mut ChaCha8Rng, n: usize) -> SquareMatrix {
    let mut m = SquareMatrix::identity(n);
    for _ in 0..2 * n {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n);
        while j == i {
            j = rng.random_range(0..n);
        }
        let theta: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        let (s, c) = theta.sin_cos();
        let rows = m.rows();
        let mut next = rows.clone();
        for col in 0..n {
            next[i][col] = c * rows[i][col] - s * rows[j][col];
            next[j][col] = s * rows[i][col] + c * rows[j][col];
        }
        m = SquareMatrix::from_rows(&next).unwrap();
    }
    m
}
