use std::hint::black_box;

use circ_iso_bench::{composite_pair, order81_graph};
use circ_iso_core::{
    brute_force_isomorphic, classify_pair, type2_group, verify_family, FamilyParams, SearchBudget,
    DEFAULT_ORACLE_BUDGET,
};
use criterion::{criterion_group, criterion_main, Criterion};

fn oracle(c: &mut Criterion) {
    let (a, b) = composite_pair();
    c.bench_function("oracle C54 composite pair", |bench| {
        bench.iter(|| brute_force_isomorphic(black_box(&a), black_box(&b), DEFAULT_ORACLE_BUDGET))
    });
}

fn classify(c: &mut Criterion) {
    let (a, b) = composite_pair();
    let budget = SearchBudget::default();
    c.bench_function("classify C54 composite pair", |bench| {
        bench.iter(|| classify_pair(black_box(&a), black_box(&b), &budget))
    });
}

fn groups(c: &mut Criterion) {
    let g = order81_graph();
    c.bench_function("type2_group C81 r=3", |bench| {
        bench.iter(|| type2_group(black_box(&g), 3))
    });
    let fp = FamilyParams::new(5, 1, 1, 0).expect("valid");
    c.bench_function("verify_family p=5 n=1", |bench| {
        bench.iter(|| verify_family(black_box(&fp.into())))
    });
}

criterion_group!(benches, oracle, classify, groups);
criterion_main!(benches);
