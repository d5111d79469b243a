use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use grquot_core::deodhar::{quotient_probe, ProbeCase};
use grquot_core::g37;
use grquot_core::pluecker::{straighten, tableau_to_poly};
use grquot_core::projnorm::{family_check, surjectivity_oracle};
use grquot_core::rewriting::g37_system;
use grquot_core::tableau::enumerate_invariants;
use grquot_core::weyl::ColumnTuple;

fn enumeration(c: &mut Criterion) {
    let w = ColumnTuple::new(7, vec![3, 5, 7]).unwrap();
    let v = ColumnTuple::new(7, vec![1, 2, 3]).unwrap();
    c.bench_function("enumerate (3,7) m=2", |b| {
        b.iter(|| enumerate_invariants(3, 7, black_box(2), &w, &v))
    });
    let top = ColumnTuple::top(2, 7).unwrap();
    let id = ColumnTuple::identity(2, 7).unwrap();
    c.bench_function("enumerate (2,7) m=2", |b| {
        b.iter(|| enumerate_invariants(2, 7, black_box(2), &top, &id))
    });
}

fn straightening(c: &mut Criterion) {
    let p = &tableau_to_poly(&g37::y(5)) * &tableau_to_poly(&g37::y(7));
    c.bench_function("straighten y5*y7", |b| b.iter(|| straighten(black_box(&p))));
}

fn confluence(c: &mut Criterion) {
    let sys = g37_system();
    c.bench_function("confluence through degree 4", |b| {
        b.iter(|| sys.check_confluence(black_box(4)))
    });
}

fn deodhar(c: &mut Criterion) {
    c.bench_function("probe s3", |b| b.iter(|| quotient_probe(black_box(ProbeCase::S3))));
}

fn projnorm(c: &mut Criterion) {
    let mut g = c.benchmark_group("g2n");
    g.sample_size(10);
    g.bench_function("family (5,3)", |b| b.iter(|| family_check(5, black_box(3), None)));
    g.bench_function("surjectivity (7,2)", |b| b.iter(|| surjectivity_oracle(7, black_box(2))));
    g.finish();
}

criterion_group!(benches, enumeration, straightening, confluence, deodhar, projnorm);
criterion_main!(benches);
