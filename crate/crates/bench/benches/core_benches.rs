use criterion::{black_box, criterion_group, criterion_main, Criterion};

use selvar_core::coeffs;
use selvar_core::registry::LFunctionDescriptor;
use selvar_core::variance;
use selvar_core::zeros;

fn bench_sieve(c: &mut Criterion) {
    c.bench_function("von_mangoldt_sieve_1e5", |b| {
        b.iter(|| coeffs::von_mangoldt_sieve(black_box(100_000)).unwrap())
    });
}

fn bench_tau(c: &mut Criterion) {
    c.bench_function("tau_table_3e4", |b| {
        b.iter(|| coeffs::tau::tau_table(black_box(30_000)))
    });
}

fn bench_curve_counts(c: &mut Criterion) {
    let desc = LFunctionDescriptor::curve_37a();
    c.bench_function("curve37_ap_2e4", |b| {
        b.iter(|| coeffs::prime_coefficients(&desc, black_box(20_000)).unwrap())
    });
}

fn bench_variance_sweep(c: &mut Criterion) {
    let table = coeffs::von_mangoldt_sieve(60_000).unwrap();
    c.bench_function("v_tilde_x5e4", |b| {
        b.iter(|| variance::v_tilde(&table, black_box(50_000.0), black_box(223.7)).unwrap())
    });
    c.bench_function("v_delta_x5e4", |b| {
        b.iter(|| variance::v_delta(&table, black_box(50_000.0), black_box(0.01)).unwrap())
    });
}

fn bench_pair_sums(c: &mut Criterion) {
    let list = zeros::synth_uniform(1000.0, 2000, 7, false);
    c.bench_function("f_statistic_2e3_zeros", |b| {
        b.iter(|| zeros::f_statistic(&list, black_box(500.0), 1000.0).unwrap())
    });
    c.bench_function("f_tilde_2e3_zeros", |b| {
        b.iter(|| zeros::f_tilde(&list, black_box(500.0), 1000.0).unwrap())
    });
}

criterion_group!(
    benches,
    bench_sieve,
    bench_tau,
    bench_curve_counts,
    bench_variance_sweep,
    bench_pair_sums
);
criterion_main!(benches);
