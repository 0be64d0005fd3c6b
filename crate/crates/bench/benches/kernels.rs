use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use xi_harmonic::duffin::{duffin_series_detail, find_zeros, scan_scheme, ADJUDICATED_CONVENTION};
use xi_harmonic::identities::dirichlet::{harmonic_extension_u, BoundaryData};
use xi_harmonic::identities::eq11::eq11_lhs;
use xi_harmonic::identities::upsilon::upsilon_series;
use xi_harmonic::specfun::{incomplete_gamma_upper, xi, zeta_complex};
use xi_harmonic::{Complex64, Tolerances};

fn special_functions(c: &mut Criterion) {
    let t = Tolerances::default();
    c.bench_function("zeta(0.5+30i)", |b| b.iter(|| zeta_complex(black_box(Complex64::new(0.5, 30.0)), t)));
    c.bench_function("xi(0.5+14i)", |b| b.iter(|| xi(black_box(Complex64::new(0.5, 14.0)))));
    c.bench_function("upper gamma(1.25, pi)", |b| b.iter(|| incomplete_gamma_upper(black_box(Complex64::new(1.25, 0.0)), std::f64::consts::PI, t)));
    c.bench_function("upsilon series s=2+i", |b| b.iter(|| upsilon_series(black_box(Complex64::new(2.0, 1.0)), t)));
}

fn integrals(c: &mut Criterion) {
    let t = Tolerances::default();
    c.bench_function("cosine integral x=4", |b| b.iter(|| eq11_lhs(black_box(4.0), t)));
    let data = BoundaryData::new(1).unwrap();
    c.bench_function("poisson extension n=1 y=0.1", |b| b.iter(|| harmonic_extension_u(&[black_box(1.0)], 0.1, data, t)));
}

fn series(c: &mut Criterion) {
    let t = Tolerances::default();
    let s = scan_scheme();
    let mut g = c.benchmark_group("series");
    g.sample_size(10);
    g.bench_function("mobius series x=1 y=1 M=2000", |b| b.iter(|| duffin_series_detail(black_box(1.0), 1.0, &s, ADJUDICATED_CONVENTION, t)));
    g.bench_function("find_zeros(30)", |b| b.iter(|| find_zeros(black_box(30.0), t)));
    g.finish();
}

criterion_group!(benches, special_functions, integrals, series);
criterion_main!(benches);
