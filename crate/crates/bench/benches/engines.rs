use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use distver::search::CsOptions;
use distver::{search, Algorithm, EngineOptions, SearchBudget};

fn engines(c: &mut Criterion) {
    let budget = SearchBudget::default();
    let exhaustive = EngineOptions {
        cs: CsOptions {
            exhaustive: true,
            ..CsOptions::default()
        },
        ..EngineOptions::default()
    };
    let mut group = c.benchmark_group("distance");
    group.sample_size(10);
    for (name, code) in distver_bench::codes() {
        for alg in [
            Algorithm::Sw,
            Algorithm::Mb,
            Algorithm::Pb,
            Algorithm::Cs,
            Algorithm::Ic,
        ] {
            group.bench_with_input(BenchmarkId::new(alg.name(), name), &code, |b, code| {
                b.iter(|| search(code, alg, &budget, &EngineOptions::default(), None).unwrap())
            });
        }
        group.bench_with_input(BenchmarkId::new("cs-exhaustive", name), &code, |b, code| {
            b.iter(|| search(code, Algorithm::Cs, &budget, &exhaustive, None).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, engines);
criterion_main!(benches);
