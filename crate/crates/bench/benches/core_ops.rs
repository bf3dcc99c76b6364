use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use constructa::{crt_solve, factorize, gcd_euclid, Field, FiniteField, Nat};
use constructa_bench::{
    crt_pairs_large, crt_pairs_small, dense_poly, fibonacci_pair, gf_256, gf_343,
};

fn bench_gcd(c: &mut Criterion) {
    let (a, b) = fibonacci_pair(200);
    c.bench_function("gcd_fibonacci_200", |bench| {
        bench.iter(|| gcd_euclid(black_box(&a), black_box(&b), false).unwrap().0)
    });
    c.bench_function("gcd_with_trace", |bench| {
        bench.iter(|| gcd_euclid(black_box(&a), black_box(&b), true).unwrap())
    });
}

fn bench_factorize(c: &mut Criterion) {
    let highly_composite = Nat::from(720_720u64);
    let semiprime = Nat::from(99_991u64 * 99_989);
    c.bench_function("factor_highly_composite", |bench| {
        bench.iter(|| factorize(black_box(&highly_composite)).unwrap())
    });
    c.bench_function("factor_semiprime", |bench| {
        bench.iter(|| factorize(black_box(&semiprime)).unwrap())
    });
}

fn bench_poly_divmod(c: &mut Criterion) {
    let b = dense_poly(7, 64, 0xACE1);
    let a = dense_poly(7, 32, 0xBEEF);
    c.bench_function("poly_divmod_64_by_32_z7", |bench| {
        bench.iter(|| black_box(&b).divmod(black_box(&a)).unwrap())
    });
}

fn bench_gf_mul(c: &mut Criterion) {
    for field in [gf_256(), gf_343()] {
        let q = field.order();
        let x = field.element(q / 2 + 1);
        let y = field.element(q - 2);
        let name = format!("gf{q}_mul");
        c.bench_function(&name, |bench| {
            bench.iter(|| field.mul(black_box(&x), black_box(&y)))
        });
        let name = format!("gf{q}_inverse");
        c.bench_function(&name, |bench| {
            bench.iter(|| field.inv(black_box(&x)).unwrap())
        });
    }
}

fn bench_crt(c: &mut Criterion) {
    let small = crt_pairs_small();
    let large = crt_pairs_large();
    c.bench_function("crt_scan_route", |bench| {
        bench.iter(|| crt_solve(black_box(&small)).unwrap())
    });
    c.bench_function("crt_pairwise_route", |bench| {
        bench.iter(|| crt_solve(black_box(&large)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_gcd,
    bench_factorize,
    bench_poly_divmod,
    bench_gf_mul,
    bench_crt
);
criterion_main!(benches);
