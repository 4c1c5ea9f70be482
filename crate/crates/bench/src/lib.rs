//! Inputs shared by the benchmarks.

use fibhess::SquareMatrix;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded random lower-Hessenberg integer matrix with entries in `-9..=9`.
pub fn random_hessenberg(order: usize, seed: u64) -> SquareMatrix<BigInt> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    SquareMatrix::from_fn(order, |i, j| {
        if j > i + 1 {
            BigInt::from(0)
        } else {
            BigInt::from(rng.gen_range(-9..=9))
        }
    })
    .expect("order is positive")
}
