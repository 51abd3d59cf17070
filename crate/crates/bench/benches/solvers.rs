use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use domkit_bench::{complete_formula, cycle, example_formula};
use domkit_core::{
    bondage_number, domination_number, enumerate_minimum_dominating_sets, reinforcement_number,
    total_bondage_number, total_domination_number, verify, ReductionTarget,
};

fn domination(c: &mut Criterion) {
    let f = example_formula();
    let mut group = c.benchmark_group("domination");
    for target in ReductionTarget::ALL {
        let art = target.build(&f);
        group.bench_with_input(BenchmarkId::new("gamma", target), &art.graph, |b, g| {
            b.iter(|| domination_number(black_box(g)))
        });
    }
    let total = ReductionTarget::TotalBondage.build(&f);
    group.bench_function("gamma_t/total-bondage", |b| {
        b.iter(|| total_domination_number(black_box(&total.graph)).unwrap())
    });
    group.bench_function("enumerate/bondage", |b| {
        let art = ReductionTarget::Bondage.build(&f);
        b.iter(|| enumerate_minimum_dominating_sets(black_box(&art.graph), false).unwrap())
    });
    for n in [30, 60, 120] {
        group.bench_with_input(BenchmarkId::new("gamma/cycle", n), &cycle(n), |b, g| {
            b.iter(|| domination_number(black_box(g)))
        });
    }
    group.finish();
}

fn perturbation(c: &mut Criterion) {
    let f = complete_formula();
    let mut group = c.benchmark_group("perturbation");
    group.sample_size(10);
    let bondage = ReductionTarget::Bondage.build(&f);
    group.bench_function("b/unsatisfiable", |b| {
        b.iter(|| bondage_number(black_box(&bondage.graph), 2).unwrap())
    });
    let total = ReductionTarget::TotalBondage.build(&f);
    group.bench_function("b_t/unsatisfiable", |b| {
        b.iter(|| total_bondage_number(black_box(&total.graph), 2).unwrap())
    });
    let reinf = ReductionTarget::Reinforcement.build(&f);
    group.bench_function("r/unsatisfiable", |b| {
        b.iter(|| reinforcement_number(black_box(&reinf.graph), 2).unwrap())
    });
    group.finish();
}

fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (name, f) in [("example", example_formula()), ("complete", complete_formula())] {
        group.bench_function(name, |b| b.iter(|| verify(black_box(&f), &ReductionTarget::ALL).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, domination, perturbation, verification);
criterion_main!(benches);
