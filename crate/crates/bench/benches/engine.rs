use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use qtwist::field::{poly_gcd, LaurentPoly};
use qtwist::twist::{build_full, r_esoteric, r_standard_direct};
use qtwist::verify::{generic_assignment, Checker};
use qtwist::{FieldElem, Numeric, Rep, Symbolic, TwistParams, Var};

fn kron_mul(c: &mut Criterion) {
    let rep = Rep::new(5, Symbolic).unwrap();
    let r = r_standard_direct(&rep).unwrap();
    c.bench_function("kron R_S gl(5) x id", |b| {
        b.iter(|| black_box(&r).kron(&qtwist::SparseMat::identity(5)))
    });
    let big = r.kron(&qtwist::SparseMat::identity(5));
    c.bench_function("mul 125-dim R_S legs", |b| {
        b.iter(|| black_box(&big).mul(&big).unwrap())
    });
}

fn gcd(c: &mut Criterion) {
    let s = LaurentPoly::var(Var::S);
    let mu = LaurentPoly::var(Var::Mu(1));
    let one = LaurentPoly::one();
    let a = &(&(&s + &one) * &(&mu - &one)) * &(&(&s * &mu) + &one);
    let b = &(&(&s + &one) * &(&mu + &one)) * &(&(&s * &mu) + &one);
    c.bench_function("gcd bivariate cubic", |bn| {
        bn.iter(|| poly_gcd(black_box(&a), black_box(&b)))
    });
    let x = FieldElem::new(a.clone(), b.clone()).unwrap();
    c.bench_function("field mul normalize", |bn| bn.iter(|| black_box(&x) * black_box(&x)));
}

fn cocycle(c: &mut Criterion) {
    let p = TwistParams::new(2).unwrap();
    let f = build_full(&p);
    let numeric = Checker::for_twist(&p, Numeric(generic_assignment(2, 0))).unwrap();
    c.bench_function("cocycle N=2 numeric", |b| b.iter(|| numeric.cocycle(&f).unwrap()));
    let symbolic = Checker::for_twist(&p, Symbolic).unwrap();
    c.bench_function("cocycle N=2 symbolic", |b| b.iter(|| symbolic.cocycle(&f).unwrap()));
    let rep = Rep::new(3, Symbolic).unwrap();
    let p1 = TwistParams::new(1).unwrap();
    c.bench_function("R_FG N=1 symbolic", |b| b.iter(|| r_esoteric(&rep, &p1).unwrap()));
}

criterion_group!(benches, kron_mul, gcd, cocycle);
criterion_main!(benches);
