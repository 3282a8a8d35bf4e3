//! Deterministic Monte Carlo experiments over random trees.
//!
//! Replica `r` at the `s`-th size draws its tree from
//! `Seed::new(mix(master, s), r)`, so each replica owns its own stream and
//! the outcome does not depend on how replicas are scheduled. Statistics are
//! aggregated in replica order after all replicas have finished.

mod exec;
pub mod gates;
pub mod stats;

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

pub use exec::Execution;
pub use stats::{
    normality_check, slope_fit, variance_interval, variance_ratio, FitPoint, Moments, Normality,
    SlopeEstimate,
};

use crate::error::{Error, Result};
use crate::gen::generate;
use crate::params::{domination, independence, k_domination};
use crate::rng::{mix, Seed};
use crate::tree::{Model, RootedTree};

/// Tree parameter sampled by an experiment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parameter {
    Independence,
    Domination,
    Matching,
    VertexCover,
    EdgeCover,
    CliqueCover,
    KDomination(usize),
}

impl Parameter {
    pub fn evaluate(self, tree: &RootedTree) -> Result<u64> {
        let n = tree.n() as u64;
        let value = match self {
            Parameter::Independence | Parameter::CliqueCover => independence(tree).value as u64,
            Parameter::Domination => domination(tree).value as u64,
            Parameter::Matching | Parameter::VertexCover => n - independence(tree).value as u64,
            Parameter::EdgeCover => {
                if n < 2 {
                    return Err(Error::InvalidArgument(
                        "edge cover of a single vertex is undefined".into(),
                    ));
                }
                independence(tree).value as u64
            }
            Parameter::KDomination(k) => k_domination(tree, k)? as u64,
        };
        Ok(value)
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::Independence => f.write_str("I"),
            Parameter::Domination => f.write_str("D"),
            Parameter::Matching => f.write_str("M"),
            Parameter::VertexCover => f.write_str("VC"),
            Parameter::EdgeCover => f.write_str("EC"),
            Parameter::CliqueCover => f.write_str("CC"),
            Parameter::KDomination(k) => write!(f, "D{k}"),
        }
    }
}

impl FromStr for Parameter {
    type Err = Error;

    /// `I`, `D`, `M`, `VC`, `EC`, `CC`, or `D<k>` / `Dk<k>` for k-domination.
    fn from_str(s: &str) -> Result<Self> {
        let p = match s {
            "I" => Parameter::Independence,
            "D" => Parameter::Domination,
            "M" => Parameter::Matching,
            "VC" => Parameter::VertexCover,
            "EC" => Parameter::EdgeCover,
            "CC" => Parameter::CliqueCover,
            other => {
                let digits = other
                    .strip_prefix("Dk")
                    .or_else(|| other.strip_prefix('D'))
                    .ok_or_else(|| {
                        Error::InvalidArgument(format!("unknown parameter `{other}`"))
                    })?;
                let k: usize = digits
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("unknown parameter `{other}`")))?;
                if k == 0 {
                    return Err(Error::InvalidArgument("k-domination needs k >= 1".into()));
                }
                Parameter::KDomination(k)
            }
        };
        Ok(p)
    }
}

impl Serialize for Parameter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentSpec {
    pub model: Model,
    pub parameter: Parameter,
    pub sizes: Vec<usize>,
    pub replicas: usize,
    pub master_seed: u64,
    /// Scheduling only; never affects results.
    pub workers: usize,
}

impl ExperimentSpec {
    pub fn validate(&self) -> Result<()> {
        if self.model == Model::Generic {
            return Err(Error::InvalidArgument(
                "experiments need model bst or rrt".into(),
            ));
        }
        if self.sizes.is_empty() {
            return Err(Error::InvalidArgument(
                "at least one size is required".into(),
            ));
        }
        if let Some(&n) = self.sizes.iter().find(|&&n| n == 0) {
            return Err(Error::InvalidArgument(format!("tree size {n} is invalid")));
        }
        if self.replicas < 2 {
            return Err(Error::InvalidArgument(
                "at least 2 replicas are required".into(),
            ));
        }
        if self.workers == 0 {
            return Err(Error::InvalidArgument(
                "worker count must be positive".into(),
            ));
        }
        if let (Model::Bst, Parameter::KDomination(k)) = (self.model, self.parameter) {
            if k > 3 {
                return Err(Error::KTooLargeForBst { k });
            }
        }
        Ok(())
    }
}

/// Seed of replica `replica` at the `size_index`-th size.
pub fn replica_seed(master: u64, size_index: usize, replica: u64) -> Seed {
    Seed::new(mix(master, size_index as u64), replica)
}

/// Domain separator for pilot runs, keeping their seeds disjoint from the
/// seeds of the final runs.
const PILOT_DOMAIN: u64 = 0x0050_494c_4f54; // "PILOT"

/// Statistics of one (model, parameter, n) cell.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonteCarloSummary {
    pub model: Model,
    pub parameter: Parameter,
    pub n: usize,
    pub replicas: usize,
    pub master_seed: u64,
    pub sample_mean: f64,
    pub sample_variance: f64,
    pub mean_over_n: f64,
    pub variance_over_n: f64,
    /// 95% normal-approximation interval for `variance_over_n`.
    pub variance_over_n_ci: (f64, f64),
    pub standard_error_of_mean: f64,
    /// `None` when there are too few samples or the variance is zero.
    pub ks_statistic: Option<f64>,
    pub sample_skewness: Option<f64>,
    pub excess_kurtosis: Option<f64>,
    pub studentized_samples: Vec<f64>,
}

impl MonteCarloSummary {
    pub fn from_values(spec: &ExperimentSpec, n: usize, values: &[u64]) -> Self {
        let xs: Vec<f64> = values.iter().map(|&v| v as f64).collect();
        let m: Moments = xs.iter().copied().collect();
        let variance = m.variance();
        let normality = normality_check(&xs).ok();
        let (lo, hi) = variance_interval(&m);
        let nf = n as f64;
        MonteCarloSummary {
            model: spec.model,
            parameter: spec.parameter,
            n,
            replicas: values.len(),
            master_seed: spec.master_seed,
            sample_mean: m.mean(),
            sample_variance: variance,
            mean_over_n: m.mean() / nf,
            variance_over_n: variance / nf,
            variance_over_n_ci: (lo / nf, hi / nf),
            standard_error_of_mean: (variance / xs.len() as f64).sqrt(),
            ks_statistic: normality.map(|r| r.ks_statistic),
            sample_skewness: normality.map(|r| r.skewness),
            excess_kurtosis: normality.map(|r| r.excess_kurtosis),
            studentized_samples: stats::studentize(&xs).unwrap_or_default(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serialization cannot fail")
    }
}

#[derive(Clone, Debug)]
pub struct SizeRun {
    pub n: usize,
    /// Parameter value of each replica, in replica order.
    pub values: Vec<u64>,
    pub summary: MonteCarloSummary,
}

#[derive(Clone, Debug)]
pub struct Experiment {
    pub spec: ExperimentSpec,
    pub runs: Vec<SizeRun>,
}

fn sample_values(
    spec: &ExperimentSpec,
    exec: Execution,
    n: usize,
    seed_of: impl Fn(u64) -> Seed + Sync + Send,
    count: usize,
) -> Result<Vec<u64>> {
    exec.map_indexed(count, |r| {
        let seed = seed_of(r as u64);
        let sample = generate(spec.model, n, seed).map_err(|e| Error::Replica {
            n,
            replica: r as u64,
            reason: e.to_string(),
        })?;
        spec.parameter
            .evaluate(&sample.tree)
            .map_err(|e| Error::Replica {
                n,
                replica: r as u64,
                reason: e.to_string(),
            })
    })
}

pub fn run_experiment(spec: &ExperimentSpec) -> Result<Experiment> {
    run_experiment_with(spec, Execution::with_workers(spec.workers))
}

/// Like [`run_experiment`] but with an explicit scheduler.
pub fn run_experiment_with(spec: &ExperimentSpec, exec: Execution) -> Result<Experiment> {
    spec.validate()?;
    let mut runs = Vec::with_capacity(spec.sizes.len());
    for (size_index, &n) in spec.sizes.iter().enumerate() {
        let values = sample_values(
            spec,
            exec,
            n,
            |r| replica_seed(spec.master_seed, size_index, r),
            spec.replicas,
        )?;
        let summary = MonteCarloSummary::from_values(spec, n, &values);
        runs.push(SizeRun { n, values, summary });
    }
    Ok(Experiment {
        spec: spec.clone(),
        runs,
    })
}

impl Experiment {
    /// One row per replica: `model,parameter,n,master_seed,replica,value`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "model,parameter,n,master_seed,replica,value")?;
        for run in &self.runs {
            for (r, v) in run.values.iter().enumerate() {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    self.spec.model, self.spec.parameter, run.n, self.spec.master_seed, r, v
                )?;
            }
        }
        Ok(())
    }

    pub fn summaries(&self) -> impl Iterator<Item = &MonteCarloSummary> {
        self.runs.iter().map(|r| &r.summary)
    }

    /// Slope of the sample means against `n`, if the sizes allow a fit.
    pub fn slope(&self) -> Result<SlopeEstimate> {
        let points: Vec<FitPoint> = self
            .summaries()
            .map(|s| FitPoint {
                n: s.n as f64,
                mean: s.sample_mean,
                standard_error: Some(s.standard_error_of_mean),
            })
            .collect();
        slope_fit(&points)
    }
}

/// Result of a variance pilot.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PilotPlan {
    pub pilot_replicas: usize,
    pub pilot_variance: f64,
    /// Replicas needed so that the standard error of `mean / n` is at most
    /// the target.
    pub replicas: usize,
}

pub const PILOT_REPLICAS: usize = 50;

/// Estimates the variance at size `n` from a small pilot whose seeds are
/// disjoint from every final-run seed, then sizes the final run.
pub fn plan_replicas(spec: &ExperimentSpec, n: usize, target_se_over_n: f64) -> Result<PilotPlan> {
    if target_se_over_n.is_nan() || target_se_over_n <= 0.0 {
        return Err(Error::InvalidArgument(
            "target standard error must be positive".into(),
        ));
    }
    let pilot_master = mix(spec.master_seed, PILOT_DOMAIN);
    let values = sample_values(
        spec,
        Execution::with_workers(spec.workers),
        n,
        |r| Seed::new(mix(pilot_master, n as u64), r),
        PILOT_REPLICAS,
    )?;
    let m: Moments = values.iter().map(|&v| v as f64).collect();
    let target = target_se_over_n * n as f64;
    let replicas = ((m.variance() / (target * target)).ceil() as usize).max(2);
    Ok(PilotPlan {
        pilot_replicas: PILOT_REPLICAS,
        pilot_variance: m.variance(),
        replicas,
    })
}
