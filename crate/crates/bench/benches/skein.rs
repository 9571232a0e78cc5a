use criterion::{black_box, criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};

use claspknot::census::Census;
use claspknot::clasp::{enumerate_params, DiskType};
use claspknot::openbook::{classify_range, Budgets};
use claspknot::tangle::MontesinosDesc;
use claspknot::{SkeinConfig, SkeinEngine};

/// Fresh engine per iteration so the cache does not carry over; built
/// outside the timed section.
fn cold_engine() -> SkeinEngine {
    SkeinEngine::new(SkeinConfig::default())
}

fn homfly(c: &mut Criterion) {
    let census = Census::shipped();
    let mut group = c.benchmark_group("homfly");
    for name in ["5_2", "8_19", "11n74", "12n838"] {
        let d = census.get(name).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), d, |b, d| {
            b.iter_batched(cold_engine, |e| e.homfly(black_box(d)).unwrap(), BatchSize::SmallInput)
        });
    }
    group.finish();
}

fn p0(c: &mut Criterion) {
    let census = Census::shipped();
    let d = census.get("12n462").unwrap();
    c.bench_function("p0/12n462", |b| {
        b.iter_batched(cold_engine, |e| e.p0(black_box(d)).unwrap(), BatchSize::SmallInput)
    });
}

fn montesinos(c: &mut Criterion) {
    let desc: MontesinosDesc = "1/6, -2/5, 2/5".parse().unwrap();
    c.bench_function("montesinos/diagram", |b| b.iter(|| black_box(&desc).diagram()));
    let d = desc.diagram();
    c.bench_function("montesinos/homfly", |b| {
        b.iter_batched(cold_engine, |e| e.homfly(black_box(&d)).unwrap(), BatchSize::SmallInput)
    });
}

fn clasp(c: &mut Criterion) {
    c.bench_function("enumerate_params/bound50", |b| {
        b.iter(|| enumerate_params(black_box(-4), black_box(1), DiskType::II, 50))
    });
}

fn openbook(c: &mut Criterion) {
    c.bench_function("openbook/scan5", |b| b.iter(|| classify_range(black_box(5), &Budgets::default(), false)));
}

criterion_group!(benches, homfly, p0, montesinos, clasp, openbook);
criterion_main!(benches);
