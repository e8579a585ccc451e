use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use hyperring_bench::{sample_rings, zn};
use hyperring_core::constructions::{product_ring, quotient_ring, DEFAULT_PRODUCT_CAP};
use hyperring_core::ideals::{enumerate_hyperideals, is_alpha_prime, prime_radical};
use hyperring_core::morphisms::enumerate_endomorphisms;
use hyperring_core::ring::validate_structure;
use hyperring_core::verifier::{generate_corpus, run_suite, CorpusConfig};

fn validation(c: &mut Criterion) {
    let mut g = c.benchmark_group("validate_structure");
    for r in sample_rings() {
        let raw = r.to_raw();
        g.bench_with_input(BenchmarkId::from_parameter(r.name()), &raw, |b, raw| {
            b.iter(|| validate_structure(black_box(raw)).unwrap())
        });
    }
    let p = product_ring(&zn(12, &[1, 5]), &zn(12, &[1, 7]), DEFAULT_PRODUCT_CAP).unwrap();
    let raw = p.ring().to_raw();
    g.sample_size(10);
    g.bench_function("Z12xZ12", |b| {
        b.iter(|| validate_structure(black_box(&raw)).unwrap())
    });
    g.finish();
}

fn lattices(c: &mut Criterion) {
    let mut g = c.benchmark_group("lattice");
    for r in sample_rings() {
        g.bench_with_input(BenchmarkId::new("hyperideals", r.name()), &r, |b, r| {
            b.iter(|| enumerate_hyperideals(r, 64).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("endomorphisms", r.name()), &r, |b, r| {
            b.iter(|| enumerate_endomorphisms(r, 64).unwrap())
        });
    }
    g.finish();
}

fn predicates(c: &mut Criterion) {
    let r = zn(30, &[1, 7]);
    let ideals = enumerate_hyperideals(&r, 64).unwrap();
    let alpha = enumerate_endomorphisms(&r, 64).unwrap().pop().unwrap();
    c.bench_function("alpha_prime_all_ideals_Z30", |b| {
        b.iter(|| {
            ideals
                .iter()
                .filter(|i| i.is_proper())
                .filter(|i| is_alpha_prime(i, &alpha).unwrap())
                .count()
        })
    });
    c.bench_function("prime_radical_all_ideals_Z30", |b| {
        b.iter(|| {
            for i in &ideals {
                black_box(prime_radical(i, 64).unwrap());
            }
        })
    });
    let six = ideals.iter().find(|i| i.len() == 6).unwrap();
    c.bench_function("quotient_Z30_by_order_6", |b| {
        b.iter(|| quotient_ring(six).unwrap())
    });
}

fn suite(c: &mut Criterion) {
    let corpus = generate_corpus(&CorpusConfig::single(12, vec![2, 3])).unwrap();
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    g.bench_function("generate_Z12_2_3", |b| {
        b.iter(|| generate_corpus(&CorpusConfig::single(12, vec![2, 3])).unwrap())
    });
    g.bench_function("run_Z12_2_3", |b| {
        b.iter(|| run_suite(&corpus.instances, &[]))
    });
    g.finish();
}

criterion_group!(benches, validation, lattices, predicates, suite);
criterion_main!(benches);
