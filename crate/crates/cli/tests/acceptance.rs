//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use fringestat::constants::{constants_report, DEFAULT_TOLERANCE, MU, MU_HAT};
use fringestat::fringe::{fringe_sum, Toll};
use fringestat::gen::generate;
use fringestat::mc::gates::{
    EXCESS_KURTOSIS_MAX, KS_MAX, MEAN_TOLERANCE, SKEWNESS_MAX, SLOPE_TOLERANCE,
    VARIANCE_RATIO_RANGE,
};
use fringestat::mc::{run_experiment, variance_ratio, ExperimentSpec, Parameter};
use fringestat::oracle::{verification_corpus, verify, Algorithms, VerifyConfig};
use fringestat::params::{domination, full_report, independence};
use fringestat::rng::Seed;
use fringestat::Model;

const TRUNCATION: usize = 20_000;
const CONSTANT_TOLERANCE: f64 = 1e-7;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn spec(
    model: Model,
    parameter: Parameter,
    sizes: Vec<usize>,
    replicas: usize,
    seed: u64,
) -> ExperimentSpec {
    ExperimentSpec {
        model,
        parameter,
        sizes,
        replicas,
        master_seed: seed,
        workers: workers(),
    }
}

fn constants_criteria() -> (Outcome, Outcome) {
    let start = Instant::now();
    let report = match constants_report(TRUNCATION, DEFAULT_TOLERANCE) {
        Ok(r) => r,
        Err(e) => return (outcome(false, e.to_string()), outcome(false, e.to_string())),
    };
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(60);

    let q = report.mu_quadrature.value;
    let s = &report.mu_series;
    let mu_ok = (q - MU).abs() <= CONSTANT_TOLERANCE
        && (s.partial_sum - q).abs() <= 2.0 / (TRUNCATION as f64 + 2.0)
        && report.quadrature_converged
        && fast;
    let c1 = outcome(
        mu_ok,
        format!(
            "quadrature {q:.12}, series {:.12} (tail {:.2e}), {:.2?}",
            s.partial_sum, s.tail_bound, elapsed
        ),
    );

    let q = report.muhat_quadrature.value;
    let s = &report.muhat_series;
    let muhat_ok = (q - MU_HAT).abs() <= CONSTANT_TOLERANCE
        && (s.partial_sum - q).abs() <= 1.0 / (TRUNCATION as f64 + 1.0)
        && report.gf_agrees
        && fast;
    let c2 = outcome(
        muhat_ok,
        format!(
            "quadrature {q:.12}, series {:.12} (tail {:.2e}), gf max deviation {:.1e}, {:.2?}",
            s.partial_sum, s.tail_bound, report.gf_max_abs_deviation, elapsed
        ),
    );
    (c1, c2)
}

fn oracle_criterion() -> Outcome {
    let start = Instant::now();
    match verify(&VerifyConfig::default(), Algorithms::default()) {
        Ok(report) => {
            let wanted = ["I", "D", "D1", "D2", "D3", "CC"];
            let rows: Vec<_> = report
                .rows
                .iter()
                .filter(|r| wanted.contains(&r.parameter.as_str()))
                .collect();
            let ok = rows.len() == wanted.len() && rows.iter().all(|r| r.passed());
            let elapsed = start.elapsed();
            let summary: Vec<String> = rows
                .iter()
                .map(|r| format!("{}:{}/{}", r.parameter, r.trees - r.mismatches, r.trees))
                .collect();
            outcome(
                ok && elapsed < Duration::from_secs(120),
                format!("{} in {elapsed:.2?}", summary.join(" ")),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn fringe_and_affine_criteria() -> (Outcome, Outcome) {
    let corpus = match verification_corpus(&VerifyConfig::default()) {
        Ok(c) => c,
        Err(e) => return (outcome(false, e.to_string()), outcome(false, e.to_string())),
    };
    let large: Vec<_> = (0..100u64)
        .map(|r| {
            let model = if r % 2 == 0 { Model::Bst } else { Model::Rrt };
            generate(model, 10_000, Seed::new(4242, r))
                .expect("generation")
                .tree
        })
        .collect();
    let trees: Vec<_> = corpus.iter().chain(large.iter()).collect();

    let mut fringe_bad = 0;
    let mut affine_bad = 0;
    for t in &trees {
        if fringe_sum(t, Toll::Independence).value != independence(t).value
            || fringe_sum(t, Toll::Domination).value != domination(t).value
        {
            fringe_bad += 1;
        }
        if !full_report(t, &[]).is_ok_and(|r| r.check_identities().is_ok()) {
            affine_bad += 1;
        }
    }
    (
        outcome(
            fringe_bad == 0,
            format!("{} trees, {fringe_bad} mismatches", trees.len()),
        ),
        outcome(
            affine_bad == 0,
            format!("{} trees, {affine_bad} violations", trees.len()),
        ),
    )
}

fn mean_slope_criterion() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for (model, c, seed) in [(Model::Bst, MU, 61), (Model::Rrt, MU_HAT, 62)] {
        let exp = match run_experiment(&spec(
            model,
            Parameter::Independence,
            vec![1_000, 10_000, 100_000],
            400,
            seed,
        )) {
            Ok(e) => e,
            Err(e) => return outcome(false, e.to_string()),
        };
        let last = exp.runs.last().expect("three sizes").summary.mean_over_n;
        let slope = exp.slope().map(|s| s.slope).unwrap_or(f64::NAN);
        ok &= (last - c).abs() <= MEAN_TOLERANCE && (slope - c).abs() <= SLOPE_TOLERANCE;
        parts.push(format!(
            "{model}: mean/n {last:.5} slope {slope:.5} (target {c})"
        ));
    }
    outcome(ok, format!("{}; {:.2?}", parts.join(", "), start.elapsed()))
}

fn clt_criterion() -> Outcome {
    let start = Instant::now();
    let (lo, hi) = VARIANCE_RATIO_RANGE;
    let mut ok = true;
    let mut parts = Vec::new();
    let cells = [
        (Model::Bst, Parameter::Independence, "sigma2"),
        (Model::Rrt, Parameter::Independence, "sigmahat2"),
        (Model::Bst, Parameter::Domination, "tau2"),
        (Model::Rrt, Parameter::Domination, "tauhat2"),
    ];
    for (i, (model, parameter, name)) in cells.into_iter().enumerate() {
        let exp = match run_experiment(&spec(
            model,
            parameter,
            vec![10_000, 20_000],
            2000,
            70 + i as u64,
        )) {
            Ok(e) => e,
            Err(e) => return outcome(false, e.to_string()),
        };
        let a = &exp.runs[0].summary;
        let b = &exp.runs[1].summary;
        let ks = a.ks_statistic.unwrap_or(f64::NAN);
        let skew = a.sample_skewness.unwrap_or(f64::NAN);
        let kurt = a.excess_kurtosis.unwrap_or(f64::NAN);
        let ratio = variance_ratio(a.sample_variance, b.sample_variance).unwrap_or(f64::NAN);
        let ci = a.variance_over_n_ci;
        let cell_ok = ks <= KS_MAX
            && skew.abs() <= SKEWNESS_MAX
            && kurt.abs() <= EXCESS_KURTOSIS_MAX
            && (lo..=hi).contains(&ratio)
            && ci.0 > 0.0;
        ok &= cell_ok;
        parts.push(format!(
            "{model}-{parameter}: ks {ks:.4} skew {skew:+.3} kurt {kurt:+.3} ratio {ratio:.3} {name} {:.5} [{:.5}, {:.5}]",
            a.variance_over_n, ci.0, ci.1
        ));
    }
    outcome(ok, format!("{}; {:.2?}", parts.join("; "), start.elapsed()))
}

fn determinism_criterion() -> Outcome {
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_fringestat"))
            .args([
                "simulate",
                "--model",
                "bst",
                "--param",
                "I",
                "--sizes",
                "1000,2000",
                "--replicas",
                "200",
            ])
            .args(["--seed", "3", "--workers", workers])
            .output()
    };
    let mut outputs = Vec::new();
    for w in ["1", "4", "16"] {
        match run(w) {
            Ok(o) if o.status.success() => outputs.push(o.stdout),
            Ok(o) => return outcome(false, format!("workers {w}: exit {:?}", o.status.code())),
            Err(e) => return outcome(false, e.to_string()),
        }
    }
    let same = outputs.windows(2).all(|w| w[0] == w[1]);
    outcome(
        same && !outputs[0].is_empty(),
        format!(
            "{} CSV bytes, workers 1/4/16 identical: {same}",
            outputs[0].len()
        ),
    )
}

/// Peak resident set size in bytes, where the platform reports it.
fn peak_rss() -> Option<usize> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: usize = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}

fn performance_criterion() -> Outcome {
    const GB: usize = 1 << 30;
    let mut ok = true;
    let mut parts = Vec::new();
    for (model, seed) in [(Model::Bst, 91), (Model::Rrt, 92)] {
        let tree = generate(model, 1_000_000, Seed::new(seed, 0))
            .expect("generation")
            .tree;
        let start = Instant::now();
        let report = full_report(&tree, &[1, 2, 3]);
        let elapsed = start.elapsed();
        ok &= report.is_ok() && elapsed < Duration::from_secs(1) && tree.heap_bytes() < GB;
        parts.push(format!("report {model} 1e6 {elapsed:.2?}"));
    }
    let start = Instant::now();
    let big = generate(Model::Rrt, 10_000_000, Seed::new(93, 0)).expect("generation");
    let elapsed = start.elapsed();
    let heap = big.tree.heap_bytes();
    ok &= elapsed < Duration::from_secs(5) && heap < GB;
    parts.push(format!(
        "generate rrt 1e7 {elapsed:.2?}, tree heap {} MB",
        heap >> 20
    ));
    drop(big);
    if let Some(rss) = peak_rss() {
        ok &= rss < GB;
        parts.push(format!("peak rss {} MB", rss >> 20));
    }
    outcome(ok, parts.join(", "))
}

fn main() {
    // run first so that the peak-memory reading covers only this criterion
    let c9 = performance_criterion();
    let (c1, c2) = constants_criteria();
    let c3 = oracle_criterion();
    let (c4, c5) = fringe_and_affine_criteria();
    let c6 = mean_slope_criterion();
    let c7 = clt_criterion();
    let c8 = determinism_criterion();

    let all = [c1, c2, c3, c4, c5, c6, c7, c8, c9];
    let names = [
        "constant mu",
        "constant muhat",
        "oracle equivalence",
        "fringe-sum identities",
        "affine identities",
        "mean and slope",
        "clt fluctuations",
        "determinism",
        "performance",
    ];
    for (i, (o, name)) in all.iter().zip(names).enumerate() {
        println!(
            "criterion {} {:<22} {}  {}",
            i + 1,
            name,
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    if !all.iter().all(|o| o.passed) {
        std::process::exit(1);
    }
}
