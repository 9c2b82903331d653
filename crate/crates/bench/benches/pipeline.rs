use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use murasugi_bench::{braid, gcd_pair, norm_targets, BRAIDS};
use murasugi_core::braid::braid_to_presentation;
use murasugi_core::fox::alexander_polynomial;
use murasugi_core::norm::{battery, decide, univ_norm_test, witness_search, SearchBounds};
use murasugi_core::LaurentPoly1;

fn alexander(c: &mut Criterion) {
    let mut g = c.benchmark_group("alexander");
    for b in BRAIDS {
        let pres = braid_to_presentation(&braid(b)).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(b), &pres, |bench, pres| {
            bench.iter(|| alexander_polynomial(black_box(pres), None).unwrap())
        });
    }
    g.finish();
}

fn gcd(c: &mut Criterion) {
    let mut g = c.benchmark_group("gcd2");
    for k in 1..=4 {
        let (a, b) = gcd_pair(k);
        g.bench_with_input(BenchmarkId::from_parameter(k), &(a, b), |bench, (a, b)| {
            bench.iter(|| black_box(a).gcd(black_box(b)).unwrap())
        });
    }
    g.finish();
}

fn norm(c: &mut Criterion) {
    let targets = norm_targets();
    let mut g = c.benchmark_group("battery");
    for (name, p) in &targets {
        g.bench_with_input(BenchmarkId::from_parameter(name), p, |bench, p| {
            bench.iter(|| battery(black_box(p)).unwrap())
        });
    }
    g.finish();

    let mut g = c.benchmark_group("witness_search");
    g.sample_size(20);
    for (name, p) in &targets {
        for parallel in [false, true] {
            let bounds = SearchBounds {
                parallel,
                ..SearchBounds::default()
            };
            let id = BenchmarkId::new(if parallel { "parallel" } else { "serial" }, name);
            g.bench_with_input(id, p, |bench, p| {
                bench.iter(|| witness_search(black_box(p), &bounds).unwrap())
            });
        }
    }
    g.finish();

    let (_, first) = &targets[0];
    c.bench_function("decide/p3", |bench| {
        bench.iter(|| decide(black_box(first), &SearchBounds::default()).unwrap())
    });
}

fn univariate(c: &mut Criterion) {
    let f = LaurentPoly1::from_coeffs(0, &[2, -1, 3, 0, -2, 1]);
    let g = LaurentPoly1::from_coeffs(0, &[1, 1, -1, 2]);
    let p = &(&f * &f.conj()) * &(&g * &g.conj());
    c.bench_function("univ_norm_test/deg16", |bench| {
        bench.iter(|| univ_norm_test(black_box(&p)).unwrap())
    });
}

criterion_group!(benches, alexander, gcd, norm, univariate);
criterion_main!(benches);
