use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use stockbraid_bench::fixture_braid;
use stockbraid_core::skein::bracket_state_sum;
use stockbraid_core::{bracket_eval, bracket_poly, build_braid, parse_csv, plat_close, trace_close, EvalPoint};

fn evaluators(c: &mut Criterion) {
    let mut group = c.benchmark_group("bracket");
    let a = EvalPoint::fibonacci();
    for len in [8usize, 12, 16] {
        let k = plat_close(&fixture_braid(6, len, len as u64)).unwrap();
        group.bench_with_input(BenchmarkId::new("state_sum", len), &k, |b, k| {
            b.iter(|| bracket_state_sum(black_box(k), 24).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("recursive", len), &k, |b, k| {
            b.iter(|| bracket_poly(black_box(k)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("temperley_lieb", len), &k, |b, k| {
            b.iter(|| bracket_eval(black_box(k), a))
        });
    }
    group.finish();
}

fn long_numeric(c: &mut Criterion) {
    let mut group = c.benchmark_group("temperley_lieb_long");
    let a = EvalPoint::fibonacci();
    for n in [4u32, 6, 8] {
        let k = trace_close(&fixture_braid(n, 200, u64::from(n)));
        group.bench_with_input(BenchmarkId::from_parameter(n), &k, |b, k| b.iter(|| bracket_eval(black_box(k), a)));
    }
    group.finish();
}

fn pipeline(c: &mut Criterion) {
    let text = include_str!("../../../data/djia_fragment_2013.csv");
    c.bench_function("table_to_bracket", |b| {
        b.iter(|| {
            let series = parse_csv(black_box(text)).unwrap();
            let word = build_braid(&series).unwrap().word;
            bracket_poly(&plat_close(&word).unwrap()).unwrap()
        })
    });
}

criterion_group!(benches, evaluators, long_numeric, pipeline);
criterion_main!(benches);
