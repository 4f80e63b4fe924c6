use criterion::{black_box, criterion_group, criterion_main, Criterion};
use ynp::complex::sample_complex;
use ynp::Cochain1;
use ynp_bench::group;

fn bench_sampler(c: &mut Criterion) {
    c.bench_function("sample_complex n=40 p=0.2", |b| {
        let mut seed = 0u64;
        b.iter(|| {
            seed += 1;
            black_box(sample_complex(40, 0.2, seed).unwrap())
        })
    });
}

fn bench_d1_norm(c: &mut Criterion) {
    let a5 = group("A5");
    let phi = Cochain1::random(a5, 12, 7);
    c.bench_function("d1_norm n=12 A5", |b| b.iter(|| black_box(phi.d1_norm())));
}

fn bench_orbit_weight(c: &mut Criterion) {
    let c2 = group("C2");
    let phi = Cochain1::random(c2, 10, 3);
    c.bench_function("orbit_weight n=10 C2 exact", |b| {
        b.iter(|| black_box(phi.orbit_weight(Cochain1::DEFAULT_WEIGHT_BUDGET)))
    });

    let a5 = group("A5");
    let phi = Cochain1::random(a5, 6, 3);
    c.bench_function("orbit_weight n=6 A5 budget=1e5", |b| {
        b.iter(|| black_box(phi.orbit_weight(100_000)))
    });
}

criterion_group!(benches, bench_sampler, bench_d1_norm, bench_orbit_weight);
criterion_main!(benches);
