use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use fringestat::gen::generate;
use fringestat::mc::{run_experiment_with, Execution, ExperimentSpec, Parameter};
use fringestat::params::full_report;
use fringestat::rng::Seed;
use fringestat::tree::Model;

fn spec(model: Model, parameter: Parameter, n: usize) -> ExperimentSpec {
    ExperimentSpec {
        model,
        parameter,
        sizes: vec![n],
        replicas: 64,
        master_seed: 42,
        workers: 1,
    }
}

/// The same experiment scheduled sequentially and on a rayon pool.
fn sequential_vs_parallel(c: &mut Criterion) {
    let workers = std::thread::available_parallelism().map_or(4, |n| n.get());
    let mut group = c.benchmark_group("experiment");
    group.sample_size(10);
    for (model, parameter) in [
        (Model::Bst, Parameter::Independence),
        (Model::Rrt, Parameter::Domination),
    ] {
        let s = spec(model, parameter, 20_000);
        group.throughput(Throughput::Elements((s.replicas * s.sizes[0]) as u64));
        let label = format!("{model}-{parameter}");
        group.bench_with_input(BenchmarkId::new("sequential", &label), &s, |b, s| {
            b.iter(|| run_experiment_with(s, Execution::Sequential).unwrap())
        });
        group.bench_with_input(
            BenchmarkId::new(format!("parallel-{workers}"), &label),
            &s,
            |b, s| b.iter(|| run_experiment_with(s, Execution::with_workers(workers)).unwrap()),
        );
    }
    group.finish();
}

fn single_tree(c: &mut Criterion) {
    let mut group = c.benchmark_group("single-tree");
    group.sample_size(10);
    let n = 1_000_000;
    group.throughput(Throughput::Elements(n as u64));
    for model in [Model::Bst, Model::Rrt] {
        group.bench_function(BenchmarkId::new("generate", model), |b| {
            b.iter(|| generate(model, n, Seed::new(1, 0)).unwrap())
        });
        let tree = generate(model, n, Seed::new(1, 0)).unwrap().tree;
        group.bench_function(BenchmarkId::new("full_report", model), |b| {
            b.iter(|| full_report(&tree, &[2, 3]).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, sequential_vs_parallel, single_tree);
criterion_main!(benches);
