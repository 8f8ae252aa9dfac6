//! Fixed-seed inputs shared by the benchmarks.

use logperm::sampling::{real_matrix, real_symmetric, real_tensor};
use logperm::{ComplexMatrix, ComplexTensor, SymmetricComplexMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed;

fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt)
}

/// Real `n x n` matrix with entries in `[lo, 1]`.
pub fn matrix(n: usize, lo: f64) -> ComplexMatrix {
    real_matrix(&mut rng(n as u64), n, lo, 1.0)
}

pub fn symmetric(two_n: usize, lo: f64) -> SymmetricComplexMatrix {
    real_symmetric(&mut rng(1000 + two_n as u64), two_n, lo, 1.0)
}

pub fn tensor(d: usize, n: usize, lo: f64, hi: f64) -> ComplexTensor {
    real_tensor(&mut rng(2000 + 10 * d as u64 + n as u64), d, n, lo, hi)
}

/// Decaying real series with constant term 1.
pub fn series(len: usize) -> Vec<f64> {
    (0..len)
        .map(|k| {
            if k == 0 {
                1.0
            } else {
                0.5f64.powi(k.min(60) as i32) / k as f64
            }
        })
        .collect()
}
