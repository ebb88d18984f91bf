use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use taureg_bench::{chain, chain_pair, gentle, two_cycle};
use taureg_core::algebra::build_algebra;
use taureg_core::catalog;
use taureg_core::presentations::{generic_rank, random_module, ProjectivePair};
use taureg_core::rep::tau;
use taureg_core::tauregular::{standard_pool, triangular_unique_component, witness_search};
use taureg_core::{Fp, Matrix, Sampler};

fn bench_rank(c: &mut Criterion) {
    let fp = Fp::default();
    let mut sampler = Sampler::with_default_trials(1);
    let m = Matrix::random(200, 200, fp, &mut sampler);
    c.bench_function("rank_200x200", |b| b.iter(|| black_box(&m).rank()));

    let wide = Matrix::random(150, 200, fp, &mut sampler);
    c.bench_function("kernel_150x200", |b| {
        b.iter(|| black_box(&wide).kernel_basis())
    });
}

fn bench_build_algebra(c: &mut Criterion) {
    c.bench_function("build_nakayama_6_5", |b| {
        b.iter(|| build_algebra(catalog::cyclic_nakayama(6, 5), Fp::default()).unwrap())
    });
}

fn bench_generic_rank(c: &mut Criterion) {
    let a = chain();
    let (p1, p0) = chain_pair();
    let pair = ProjectivePair::new(&a, p1, p0);
    let mut sampler = Sampler::with_default_trials(1);
    c.bench_function("generic_rank_chain_2x", |b| {
        b.iter(|| generic_rank(black_box(&pair), &mut sampler).unwrap())
    });
}

fn bench_tau(c: &mut Criterion) {
    let a = gentle();
    let mut sampler = Sampler::with_default_trials(1);
    let m = random_module(&a, 4, &mut sampler).unwrap();
    c.bench_function("tau_random_gentle", |b| {
        b.iter(|| tau(black_box(&m)).unwrap())
    });
}

fn bench_classify(c: &mut Criterion) {
    let a = chain();
    let mut sampler = Sampler::with_default_trials(1);
    c.bench_function("classify_chain_142", |b| {
        b.iter(|| triangular_unique_component(&a, &[1, 4, 2], &mut sampler).unwrap())
    });
}

fn bench_witness(c: &mut Criterion) {
    let a = two_cycle();
    let pool = standard_pool(&a).unwrap();
    let mut sampler = Sampler::with_default_trials(1);
    c.bench_function("witness_two_cycle", |b| {
        b.iter(|| witness_search(&a, 4, &pool, &mut sampler).unwrap())
    });
}

criterion_group!(
    benches,
    bench_rank,
    bench_build_algebra,
    bench_generic_rank,
    bench_tau,
    bench_classify,
    bench_witness
);
criterion_main!(benches);
