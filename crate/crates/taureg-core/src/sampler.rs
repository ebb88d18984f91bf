//! Deterministic randomness for genericity arguments.
//!
//! Every probabilistic routine takes an explicit `Sampler` so that a run is
//! reproducible from its printed seed. Sub-streams are split off the parent
//! deterministically.

use crate::fp::{Fp, Scalar};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// Number of independent generic samples taken when estimating a generic rank.
pub const DEFAULT_TRIALS: usize = 5;

/// Maximum number of re-samples while hunting a simultaneous maximal-rank
/// witness before giving up with an internal error.
pub const MAX_RESAMPLES: usize = 32;

pub struct Sampler {
    pub trials: usize,
    rng: ChaCha12Rng,
}

impl Sampler {
    pub fn seeded(seed: u64, trials: usize) -> Self {
        assert!(trials >= 1, "at least one generic trial is required");
        Sampler {
            trials,
            rng: ChaCha12Rng::seed_from_u64(seed),
        }
    }

    pub fn with_default_trials(seed: u64) -> Self {
        Sampler::seeded(seed, DEFAULT_TRIALS)
    }

    /// Uniform scalar in [0, p). Rejection sampling keeps it exactly uniform.
    pub fn scalar(&mut self, fp: Fp) -> Scalar {
        let p = fp.modulus();
        let zone = u64::MAX - u64::MAX % p;
        loop {
            let x = self.rng.next_u64();
            if x < zone {
                return x % p;
            }
        }
    }

    /// Uniform in [0, bound).
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0);
        let b = bound as u64;
        let zone = u64::MAX - u64::MAX % b;
        loop {
            let x = self.rng.next_u64();
            if x < zone {
                return (x % b) as usize;
            }
        }
    }

    /// Deterministically derived independent sub-stream.
    pub fn split(&mut self) -> Sampler {
        Sampler {
            trials: self.trials,
            rng: ChaCha12Rng::seed_from_u64(self.rng.next_u64()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_streams() {
        let fp = Fp::default();
        let a: Vec<u64> = {
            let mut s = Sampler::seeded(42, 5);
            (0..8).map(|_| s.scalar(fp)).collect()
        };
        let b: Vec<u64> = {
            let mut s = Sampler::seeded(42, 5);
            (0..8).map(|_| s.scalar(fp)).collect()
        };
        assert_eq!(a, b);
        let c: Vec<u64> = {
            let mut s = Sampler::seeded(43, 5);
            (0..8).map(|_| s.scalar(fp)).collect()
        };
        assert_ne!(a, c);
    }

    #[test]
    fn split_streams_differ_from_parent() {
        let fp = Fp::default();
        let mut s = Sampler::seeded(7, 5);
        let mut t = s.split();
        let x: Vec<u64> = (0..4).map(|_| s.scalar(fp)).collect();
        let y: Vec<u64> = (0..4).map(|_| t.scalar(fp)).collect();
        assert_ne!(x, y);
    }

    /// Pinned fixture: the 2x2 random matrix at seed 20240801 must never change.
    #[test]
    fn pinned_random_matrix_fixture() {
        use crate::matrix::Matrix;
        let fp = Fp::default();
        let mut s = Sampler::seeded(20240801, 1);
        let m = Matrix::random(2, 2, fp, &mut s);
        let got: Vec<u64> = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| m.get(i, j))
            .collect();
        // Recorded once from a reference run; guards RNG/stream layout drift.
        assert_eq!(got, pinned_values());
    }

    fn pinned_values() -> Vec<u64> {
        // The expectation is generated by the same code path once and frozen.
        // If this test fails the RNG plumbing changed and every seeded result
        // in the test suite is suspect.
        vec![
            1070525071059131231,
            700763577012344114,
            462239770145226174,
            755790862575451896,
        ]
    }
}
