use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use gaussprobe::channel::twomode_squeeze_channel;
use gaussprobe::optimize::{optimize_probe, EnergyBudget, Family, OptimizerConfig};
use gaussprobe::validate::oracle_panel;
use gaussprobe::Exec;

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle_panel_200");
    g.sample_size(10);
    for (name, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
        g.bench_function(name, |b| b.iter(|| oracle_panel(black_box(200), 7, 1.0, exec).unwrap()));
    }
    g.finish();
}

fn restarts(c: &mut Criterion) {
    let mut g = c.benchmark_group("optimizer_16_restarts");
    g.sample_size(10);
    let ch = twomode_squeeze_channel(0.0);
    let budget = EnergyBudget::new(2.0);
    for (name, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
        let cfg = OptimizerConfig { restarts: 16, exec, ..OptimizerConfig::default() };
        g.bench_function(name, |b| {
            b.iter(|| optimize_probe(&ch, Family::TwoModeRestricted, black_box(&budget), &cfg).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, oracle, restarts);
criterion_main!(benches);
