use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use ynp::complex::sample_complex;
use ynp::search::{enumerate_cocycles, has_nontrivial_class};
use ynp_bench::{group, threshold_p};

fn bench_detection(c: &mut Criterion) {
    let c2 = group("C2");
    let mut grp = c.benchmark_group("detect n=40 C2");
    for alpha in [0.5, 1.5, 2.5] {
        let p = threshold_p(40, alpha);
        grp.bench_with_input(BenchmarkId::from_parameter(alpha), &p, |b, &p| {
            let mut seed = 0u64;
            b.iter(|| {
                seed += 1;
                let y = sample_complex(40, p, seed).unwrap();
                black_box(has_nontrivial_class(&y, &c2).trivial)
            })
        });
    }
    grp.finish();
}

fn bench_enumeration(c: &mut Criterion) {
    let c3 = group("C3");
    let y = sample_complex(7, 0.3, 11).unwrap();
    c.bench_function("enumerate n=7 C3 p=0.3", |b| {
        b.iter(|| black_box(enumerate_cocycles(&y, &c3, 1_000_000).cocycles.len()))
    });
}

fn bench_quotient_walk(c: &mut Criterion) {
    let a5 = group("A5");
    let y = Arc::new(sample_complex(20, threshold_p(20, 2.5), 5).unwrap());
    c.bench_function("detect n=20 A5 dense", |b| {
        b.iter(|| black_box(has_nontrivial_class(&y, &a5).trivial))
    });
}

criterion_group!(benches, bench_detection, bench_enumeration, bench_quotient_walk);
criterion_main!(benches);
