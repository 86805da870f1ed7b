use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use torus_growth::formulas::main_growth_function;
use torus_growth::group::{sphere_counts_bfs, sphere_counts_grammar};
use torus_growth::spectral::{all_roots, perron_check, reciprocal_g, DEFAULT_MARGIN};
use torus_growth::{series_expand, TorusParams};

const PAIRS: [(u32, u32); 3] = [(2, 3), (4, 4), (5, 6)];

fn tp(p: u32, q: u32) -> TorusParams {
    TorusParams::new(p, q).unwrap()
}

fn sphere_counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("sphere_counts");
    group.sample_size(10);
    for (p, q) in PAIRS {
        let id = format!("({p},{q}) n=9");
        group.bench_with_input(BenchmarkId::new("bfs", &id), &tp(p, q), |b, &params| {
            b.iter(|| sphere_counts_bfs(black_box(params), 9).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("grammar", &id), &tp(p, q), |b, &params| {
            b.iter(|| sphere_counts_grammar(black_box(params), 9))
        });
    }
    group.finish();
}

fn series(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    for (p, q) in [(2, 3), (7, 12)] {
        let f = main_growth_function(tp(p, q));
        group.bench_function(format!("({p},{q}) n=200"), |b| {
            b.iter(|| series_expand(black_box(&f), 200).unwrap())
        });
    }
    group.bench_function("main_growth_function (11,12)", |b| {
        b.iter(|| main_growth_function(black_box(tp(11, 12))))
    });
    group.finish();
}

fn roots(c: &mut Criterion) {
    let mut group = c.benchmark_group("roots");
    for (p, q) in [(5, 7), (8, 12), (12, 12)] {
        let g = reciprocal_g(tp(p, q));
        group.bench_function(format!("all_roots ({p},{q})"), |b| {
            b.iter(|| all_roots(black_box(&g)).unwrap())
        });
    }
    group.bench_function("perron_check (11,12)", |b| {
        b.iter(|| perron_check(black_box(tp(11, 12)), DEFAULT_MARGIN).unwrap())
    });
    group.finish();
}

criterion_group!(benches, sphere_counts, series, roots);
criterion_main!(benches);
