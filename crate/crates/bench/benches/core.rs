use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use landau_bench::{e4, frame_section, sample_points, spec};
use landau_core::fuchsian::eval_form;
use landau_core::hyperbolic::{default_grid, Prop1Checker, Prop1Config, RadialFunction, WTransform};
use landau_core::numerics::{eigh, QuadratureRule};

fn quadrature(c: &mut Criterion) {
    c.bench_function("gauss_hermite_128", |b| b.iter(|| QuadratureRule::gauss_hermite(black_box(128)).unwrap()));
    c.bench_function("gauss_laguerre_128", |b| b.iter(|| QuadratureRule::gauss_laguerre(black_box(128), 2.5).unwrap()));
}

fn gabor(c: &mut Criterion) {
    let mut g = c.benchmark_group("gabor");
    g.sample_size(10);
    g.bench_function("frame_section_40_r14", |b| b.iter(|| frame_section(black_box(40), 14)));
    let s = frame_section(40, 14);
    let head = s.leading(20).unwrap();
    g.bench_function("eigh_20", |b| b.iter(|| eigh(black_box(&head)).unwrap()));
    g.bench_function("eigh_40", |b| b.iter(|| eigh(black_box(&s)).unwrap()));
    g.finish();
}

fn hyperbolic(c: &mut Criterion) {
    let s = spec(5.0, 2);
    let w = WTransform::new(s, RadialFunction::reference_state(s)).unwrap();
    let grid = default_grid();
    c.bench_function("w_transform_grid", |b| b.iter(|| grid.iter().map(|p| w.eval(*p).unwrap()).sum::<landau_core::Complex>()));
    let checker = Prop1Checker::new(s, RadialFunction::reference_state(s), Prop1Config::default()).unwrap();
    c.bench_function("expansion_check_grid", |b| b.iter(|| grid.iter().map(|p| checker.check(*p).unwrap().rel_err).fold(0.0, f64::max)));
}

fn forms(c: &mut Criterion) {
    let f = e4(40);
    let pts = sample_points();
    c.bench_function("eval_e4_16_points", |b| b.iter(|| pts.iter().map(|p| eval_form(&f, *p).unwrap()).sum::<landau_core::Complex>()));
}

criterion_group!(benches, quadrature, gabor, hyperbolic, forms);
criterion_main!(benches);
