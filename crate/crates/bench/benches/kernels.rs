use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use macdaha::asymfunc::{limit_Y, AsymFn};
use macdaha::coeffring::RatQT;
use macdaha::daharep::{apply_T, apply_Y};
use macdaha::pbw::Engine;
use macdaha::weyl::{bruhat_leq, AsymIndex};
use macdaha_bench::{monomial, sample_word};

fn coefficients(c: &mut Criterion) {
    let a = RatQT::parse("(1-t)*q/(q-t)").unwrap();
    let b = RatQT::parse("(1+q*t^2)/(1-q*t)").unwrap();
    c.bench_function("ratqt add+mul", |bch| bch.iter(|| black_box(&a).add(black_box(&b)).mul(&a)));
}

fn operators(c: &mut Criterion) {
    let f = monomial(&[2, 0, 1, 1]);
    c.bench_function("apply_T rank 4", |b| b.iter(|| apply_T(2, black_box(&f)).unwrap()));
    c.bench_function("apply_Y rank 4", |b| b.iter(|| apply_Y(1, black_box(&f)).unwrap()));
    let g = AsymFn::basis(AsymIndex::new(vec![1], vec![1, 1]));
    c.bench_function("limit Y_1 on m<(1)|(1,1)>", |b| b.iter(|| limit_Y(1, black_box(&g)).unwrap()));
}

fn straightening(c: &mut Criterion) {
    let w = sample_word();
    c.bench_function("straighten cold engine", |b| b.iter(|| Engine::new(3).straighten(black_box(&w)).unwrap()));
    let engine = Engine::new(3);
    c.bench_function("straighten warm engine", |b| b.iter(|| engine.straighten(black_box(&w)).unwrap()));
}

fn bruhat(c: &mut Criterion) {
    c.bench_function("bruhat_leq rank 4", |b| b.iter(|| bruhat_leq(black_box(&[0, 1, 3, 2]), black_box(&[3, 2, 1, 0])).unwrap()));
}

criterion_group!(benches, coefficients, operators, straightening, bruhat);
criterion_main!(benches);
