use criterion::{black_box, criterion_group, criterion_main, Criterion};

use wildlie_core::check::run_suite;
use wildlie_core::geometry::{vs_add, vs_mul, AffPoint};
use wildlie_core::interp::{encode, interp_add, interp_mul};
use wildlie_core::termlang::parse_expr;
use wildlie_core::{GElem, GPrimeElem, QuadRat};

fn field(c: &mut Criterion) {
    let x = QuadRat::from_parts(355, 113, -22, 7);
    let y = QuadRat::from_parts(-17, 12, 99, 70);
    c.bench_function("qfield/mul", |b| b.iter(|| black_box(&x) * black_box(&y)));
    c.bench_function("qfield/floor", |b| b.iter(|| black_box(&x).floor()));
    c.bench_function("qfield/inv", |b| b.iter(|| black_box(&y).inv()));
}

fn groups(c: &mut Criterion) {
    let g = GElem::new(QuadRat::frac(3, 2), QuadRat::from_parts(1, 3, 2, 5), QuadRat::frac(1, 7));
    let h = GElem::new(QuadRat::from_parts(0, 1, 1, 1), QuadRat::frac(-5, 4), QuadRat::frac(2, 3));
    c.bench_function("group/mul", |b| b.iter(|| black_box(&g).mul(black_box(&h))));
    c.bench_function("group/commutator", |b| b.iter(|| black_box(&g).commutator(black_box(&h))));

    let p = GPrimeElem::new(QuadRat::frac(1, 2), QuadRat::sqrt2(), QuadRat::frac(1, 3), QuadRat::from_parts(3, 2, 1, 1)).unwrap();
    let q = GPrimeElem::new(QuadRat::frac(-2, 3), QuadRat::frac(5, 7), QuadRat::zero(), QuadRat::frac(7, 3)).unwrap();
    c.bench_function("gprime/mul", |b| b.iter(|| black_box(&p).mul(black_box(&q))));
}

fn constructions(c: &mut Criterion) {
    let x = QuadRat::from_parts(2, 3, -1, 1);
    let y = QuadRat::from_parts(3, 1, 1, 2);
    let aux = AffPoint { u: QuadRat::one(), v: QuadRat::one() };
    c.bench_function("staudt/add", |b| b.iter(|| vs_add(black_box(&x), black_box(&y), &aux)));
    c.bench_function("staudt/mul", |b| b.iter(|| vs_mul(black_box(&x), black_box(&y), &aux)));

    let (ex, ey) = (encode(&x), encode(&y));
    c.bench_function("interp/add", |b| b.iter(|| interp_add(black_box(&ex), black_box(&ey))));
    c.bench_function("interp/mul", |b| b.iter(|| interp_mul(black_box(&ex), black_box(&ey))));
}

fn parsing(c: &mut Criterion) {
    let src = "([1,2,1/2]*[3/2-r2,4,3/4])^-3*[0,r2,1/3]";
    c.bench_function("termlang/parse", |b| b.iter(|| parse_expr(black_box(src))));
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("check");
    group.sample_size(10);
    group.bench_function("geometry/20", |b| b.iter(|| run_suite("geometry", 1, 20)));
    group.finish();
}

criterion_group!(benches, field, groups, constructions, parsing, suites);
criterion_main!(benches);
