use covosc::fockalg::{build_generators, squeeze_vacuum, verify_algebra};
use covosc::oscillator::Rapidity;
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn bench_structure_verification(c: &mut Criterion) {
    let set = build_generators(12).unwrap();
    c.bench_function("verify 45 commutators at N = 12", |b| {
        b.iter(|| black_box(verify_algebra(black_box(&set), 1e-10)))
    });
}

fn bench_generator_build(c: &mut Criterion) {
    c.bench_function("build generator set at N = 12", |b| {
        b.iter(|| black_box(build_generators(black_box(12)).unwrap()))
    });
}

fn bench_squeeze(c: &mut Criterion) {
    c.bench_function("squeezed vacuum at N = 30", |b| {
        b.iter(|| black_box(squeeze_vacuum(Rapidity::new(black_box(1.0)), 30).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_structure_verification,
    bench_generator_build,
    bench_squeeze
);
criterion_main!(benches);
