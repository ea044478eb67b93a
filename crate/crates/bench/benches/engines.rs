use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use heckerep::hecke::{IwahoriHecke, SphericalModule};
use heckerep::{fiber, latoracle, repring};
use heckerep_bench::{hecke_cases, minuscule_cases, oracle_cases};

fn raw(mus: &[heckerep::WeightVec]) -> Vec<Vec<i64>> {
    mus.iter().map(|m| m.coords().to_vec()).collect()
}

fn hecke_module(c: &mut Criterion) {
    let mut g = c.benchmark_group("hecke_module");
    for case in hecke_cases().into_iter().chain(minuscule_cases()) {
        let mus = raw(&case.mus);
        g.bench_function(BenchmarkId::from_parameter(case.name), |b| {
            b.iter(|| SphericalModule::new(case.datum.clone()).unwrap().structure_constants(&mus).unwrap())
        });
    }
    g.finish();
}

fn hecke_iwahori(c: &mut Criterion) {
    let mut g = c.benchmark_group("hecke_iwahori");
    g.sample_size(10);
    for case in hecke_cases().into_iter().take(1) {
        g.bench_function(BenchmarkId::from_parameter(case.name), |b| {
            b.iter(|| IwahoriHecke::new(case.datum.clone()).unwrap().structure_constants(&case.mus).unwrap())
        });
    }
    g.finish();
}

fn fiber_recursion(c: &mut Criterion) {
    let mut g = c.benchmark_group("fiber_recursion");
    for case in minuscule_cases() {
        g.bench_function(BenchmarkId::new("points", case.name), |b| {
            b.iter(|| fiber::point_count_recursion(&case.datum, &case.mus, &case.lambda).unwrap())
        });
        g.bench_function(BenchmarkId::new("audit", case.name), |b| {
            b.iter(|| fiber::equidimensionality_audit(&case.datum, &case.mus, &case.lambda).unwrap())
        });
    }
    g.finish();
}

fn tensor(c: &mut Criterion) {
    let mut g = c.benchmark_group("tensor_decompose");
    for case in hecke_cases().into_iter().chain(minuscule_cases()) {
        g.bench_function(BenchmarkId::from_parameter(case.name), |b| {
            b.iter(|| repring::tensor_decompose(&case.datum, &case.mus).unwrap())
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("latoracle");
    g.sample_size(10);
    for case in oracle_cases() {
        for q in [2u8, 3] {
            g.bench_function(BenchmarkId::new(case.name, q), |b| {
                b.iter(|| latoracle::enumerate_fiber(&case.datum, &case.mus, &case.lambda, q, false).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, hecke_module, hecke_iwahori, fiber_recursion, tensor, oracle);
criterion_main!(benches);
