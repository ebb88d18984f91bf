//! Shared fixtures for the criterion benchmarks.

use std::sync::Arc;
use taureg_core::algebra::{build_algebra, Algebra};
use taureg_core::catalog;
use taureg_core::rep::ProjSum;
use taureg_core::Fp;

pub fn chain() -> Arc<Algebra> {
    build_algebra(catalog::chain_ab(), Fp::default()).unwrap()
}

pub fn gentle() -> Arc<Algebra> {
    build_algebra(catalog::double_arrow_gentle(), Fp::default()).unwrap()
}

pub fn two_cycle() -> Arc<Algebra> {
    build_algebra(catalog::two_cycle(), Fp::default()).unwrap()
}

/// A mid-sized projective pair over the chain: P1 = P0 = P(1)^2 + P(2)^2 + P(3)^2.
pub fn chain_pair() -> (ProjSum, ProjSum) {
    (
        ProjSum {
            mults: vec![2, 2, 2],
        },
        ProjSum {
            mults: vec![2, 2, 2],
        },
    )
}
