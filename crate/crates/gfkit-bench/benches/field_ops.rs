//! Benchmarks for GF(p^n) arithmetic, Frobenius application, irreducible
//! polynomial search, and the Galois correspondence.

use criterion::{criterion_group, criterion_main, Criterion};
use gfkit::{correspondence_table, frobenius, galois_group, FieldSpec, PrimePoly};
use std::hint::black_box;

fn spec(p: u64, n: usize) -> FieldSpec {
    FieldSpec::new(p, n, None).unwrap()
}

fn bench_field_mul(c: &mut Criterion) {
    let mut g = c.benchmark_group("field_mul");
    for (p, n) in [(2u64, 8usize), (2, 16), (7, 5), (251, 2)] {
        let spec = spec(p, n);
        let a = spec.element_at(spec.order() / 3);
        let b = spec.element_at(spec.order() / 5 + 1);
        g.bench_function(format!("gf_{p}_{n}"), |bch| {
            bch.iter(|| black_box(&a) * black_box(&b))
        });
    }
    g.finish();
}

fn bench_field_inv(c: &mut Criterion) {
    let mut g = c.benchmark_group("field_inv");
    for (p, n) in [(2u64, 8usize), (2, 16), (7, 5), (251, 2)] {
        let spec = spec(p, n);
        let a = spec.element_at(spec.order() / 3);
        g.bench_function(format!("gf_{p}_{n}"), |bch| {
            bch.iter(|| black_box(&a).inv().unwrap())
        });
    }
    g.finish();
}

// Three ways to apply Phi^k: repeated-squaring powmod (what `frobenius`
// does), building the matrix power per call, and applying a cached matrix.
fn bench_frobenius(c: &mut Criterion) {
    let mut g = c.benchmark_group("frobenius_gf_2_16_k13");
    let spec = spec(2, 16);
    let a = spec.element_at(40503);
    let k = 13u64;
    let cached = spec.frobenius_matrix().pow(k);
    g.bench_function("powmod", |bch| {
        bch.iter(|| frobenius(black_box(&a), black_box(k)))
    });
    g.bench_function("matrix_power_per_call", |bch| {
        bch.iter(|| {
            spec.frobenius_matrix()
                .pow(black_box(k))
                .mul_vec(black_box(&a).coeffs())
        })
    });
    g.bench_function("cached_matrix", |bch| {
        bch.iter(|| cached.mul_vec(black_box(&a).coeffs()))
    });
    g.finish();
}

fn bench_find_irreducible(c: &mut Criterion) {
    let mut g = c.benchmark_group("find_irreducible");
    g.sample_size(20);
    for (p, n) in [(2u64, 12usize), (2, 16), (5, 6), (13, 4)] {
        g.bench_function(format!("gf_{p}_{n}"), |bch| {
            bch.iter(|| PrimePoly::find_irreducible(black_box(p), black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn bench_galois(c: &mut Criterion) {
    let mut g = c.benchmark_group("galois_gf_2_12");
    g.sample_size(10);
    let spec12 = spec(2, 12);
    let grp = galois_group(&spec12, 1).unwrap();
    g.bench_function("group_construction", |bch| {
        bch.iter(|| galois_group(black_box(&spec12), black_box(1)).unwrap())
    });
    g.bench_function("correspondence_table", |bch| {
        bch.iter(|| correspondence_table(black_box(&grp)).unwrap())
    });
    g.finish();
}

criterion_group!(
    benches,
    bench_field_mul,
    bench_field_inv,
    bench_frobenius,
    bench_find_irreducible,
    bench_galois
);
criterion_main!(benches);
