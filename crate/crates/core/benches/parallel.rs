//! Sequential against rayon-parallel execution on the two data-parallel
//! workloads: suborder enumeration and a verification suite.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fgsp6::clifford;
use fgsp6::par::Execution;
use fgsp6::quat::TernaryForm;
use fgsp6::verify::{self, Config};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn suborders(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_suborders");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 8), &exec, |b, &exec| {
            b.iter(|| clifford::enumerate_suborders_with(black_box(TernaryForm::new(2, 3, 5, 1, 1, 1)), 8, exec))
        });
    }
    g.finish();
}

fn diffop_suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_diffop");
    g.sample_size(10);
    for (name, exec) in MODES {
        let cfg = Config { trials: Some(200), exec, ..Config::default() };
        g.bench_with_input(BenchmarkId::new(name, 200), &cfg, |b, cfg| b.iter(|| verify::run_suite("diffop", cfg).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, suborders, diffop_suite);
criterion_main!(benches);
