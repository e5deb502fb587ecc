//! Benchmarks pitting the rayon path against a single-thread run of the
//! same code.
//!
//! Built with the default `parallel` feature, every group carries a
//! `threads/N` and a `threads/1` variant (the latter runs each iteration in
//! a one-thread rayon pool, which is the sequential schedule plus pool
//! overhead). The parallel surfaces are the splitting-formula candidate
//! sweep and the residual sweep across degrees; the two table builds are
//! schedule-independent and tracked as scalar baselines. Building with
//! `--no-default-features` benches the plain sequential fallback under the
//! same bench names, so criterion baselines can compare the two feature
//! configurations directly:
//!
//! ```text
//! cargo bench -p gw-core -- --save-baseline parallel
//! cargo bench -p gw-core --no-default-features -- --baseline parallel
//! ```

use criterion::{criterion_group, criterion_main, Criterion};

use gw_core::arith::Integer;
use gw_core::kontsevich::{self, NdTable};
use gw_core::quantum;
use gw_core::severi::{self, AuxKey, AuxProvider};

/// Answers 1 for every key: makes the splitting formula evaluable at sizes
/// where no real table exists, exercising the full candidate sweep.
struct UnitAux;

impl AuxProvider for UnitAux {
    fn lookup(&self, _key: &AuxKey) -> Option<Integer> {
        Some(Integer::from(1))
    }
}

fn closed_form_table(d: u32) -> NdTable {
    let mut t = NdTable::new();
    kontsevich::n_d(d, &mut t).unwrap();
    t
}

#[derive(Clone, Copy)]
enum Runner {
    Default,
    #[cfg(feature = "parallel")]
    OneThread(&'static rayon::ThreadPool),
}

impl Runner {
    fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self {
            Runner::Default => f(),
            #[cfg(feature = "parallel")]
            Runner::OneThread(pool) => pool.install(f),
        }
    }
}

fn bench_workloads(c: &mut Criterion, label: &str, runner: Runner) {
    let mut group = c.benchmark_group(format!("nd_closed_form/{label}"));
    group.bench_function("d=64", |b| b.iter(|| runner.run(|| closed_form_table(64))));
    group.finish();

    let mut group = c.benchmark_group(format!("nd_wdvv/{label}"));
    group.bench_function("d=16", |b| b.iter(|| runner.run(|| quantum::n_d_via_wdvv(16))));
    group.finish();

    let table = closed_form_table(24);
    let mut group = c.benchmark_group(format!("wdvv_residual_sweep/{label}"));
    group.bench_function("max=24", |b| {
        b.iter(|| runner.run(|| quantum::wdvv_residuals(24, &table)))
    });
    group.finish();

    let mut group = c.benchmark_group(format!("formula5_sweep/{label}"));
    group.sample_size(20);
    group.bench_function("d=18", |b| {
        b.iter(|| runner.run(|| severi::formula5(18, 17, &UnitAux).unwrap()))
    });
    group.finish();
}

#[cfg(feature = "parallel")]
fn benches(c: &mut Criterion) {
    bench_workloads(
        c,
        &format!("threads/{}", rayon::current_num_threads()),
        Runner::Default,
    );
    let pool: &'static rayon::ThreadPool = Box::leak(Box::new(
        rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap(),
    ));
    bench_workloads(c, "threads/1", Runner::OneThread(pool));
}

#[cfg(not(feature = "parallel"))]
fn benches(c: &mut Criterion) {
    bench_workloads(c, "sequential", Runner::Default);
}

criterion_group!(recursions, benches);
criterion_main!(recursions);
