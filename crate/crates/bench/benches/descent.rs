use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use kasner_core::analysis::{empirical_extremize, Mode};
use kasner_core::kasner::{area_ratio, descendant, sequence};
use kasner_core::sampler::random_convex_polygon;
use kasner_core::verify::{run_suite, VerifyConfig};
use kasner_core::{KasnerParams, SamplerConfig, Tolerance};

fn descent(c: &mut Criterion) {
    let p = KasnerParams::new(0.3).unwrap();
    let mut g = c.benchmark_group("descendant");
    for n in [5, 20, 100] {
        let k = random_convex_polygon(&SamplerConfig::new(n, 1)).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &k, |b, k| {
            b.iter(|| descendant(black_box(k), p).unwrap())
        });
    }
    g.finish();

    let k = random_convex_polygon(&SamplerConfig::new(8, 2)).unwrap();
    c.bench_function("sequence_8gon_t20", |b| {
        b.iter(|| sequence(black_box(&k), p, 20).unwrap())
    });
    c.bench_function("area_ratio_8gon", |b| {
        b.iter(|| area_ratio(black_box(&k), p).unwrap())
    });
}

fn sampling(c: &mut Criterion) {
    let mut seed = 0u64;
    c.bench_function("sample_10gon", |b| {
        b.iter(|| {
            seed += 1;
            random_convex_polygon(&SamplerConfig::new(10, seed)).unwrap()
        })
    });
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("suites");
    g.sample_size(10);
    let cfg = VerifyConfig {
        n: 5,
        samples: 100,
        m_grid: vec![0.1, 0.5, 0.9],
        seed: 0,
        tol: Tolerance::default(),
    };
    g.bench_function("verify_pentagon_100", |b| {
        b.iter(|| run_suite(&cfg).unwrap())
    });
    let p = KasnerParams::midpoint();
    g.bench_function("extremize_pentagon_min_budget2", |b| {
        b.iter(|| empirical_extremize(5, p, Mode::Min, 2, 0).unwrap())
    });
    g.finish();
}

criterion_group!(benches, descent, sampling, suites);
criterion_main!(benches);
