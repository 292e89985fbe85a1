use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use patterncount_line::{
    construction_mary, count_instances, count_kap, count_kap_seq, gen_ap, LinePattern,
};
use patterncount_exact::rat;

fn bench_count_kap(c: &mut Criterion) {
    let v = gen_ap(200, &rat(0), &rat(1)).unwrap();
    let mut g = c.benchmark_group("count_kap_ap200_k4");
    g.bench_function("data_parallel", |b| {
        b.iter(|| count_kap(black_box(&v), 4).unwrap())
    });
    g.bench_function("sequential", |b| {
        b.iter(|| count_kap_seq(black_box(&v), 4).unwrap())
    });
    g.finish();
}

fn bench_count_instances(c: &mut Criterion) {
    let v = construction_mary(1);
    let p = LinePattern::from_integers(&[0, 1, 3]).unwrap();
    c.bench_function("count_instances_mary_k1", |b| {
        b.iter(|| count_instances(black_box(&v), black_box(&p), false))
    });
}

criterion_group!(benches, bench_count_kap, bench_count_instances);
criterion_main!(benches);
