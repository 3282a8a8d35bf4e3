//! Pre-registered acceptance gates for simulation output.

use serde::Serialize;

use super::{variance_ratio, Experiment, Parameter};
use crate::constants::{MU, MU_HAT};
use crate::tree::Model;

/// Allowed `|mean/n - constant|` at the largest sizes.
pub const MEAN_TOLERANCE: f64 = 2e-3;
/// Allowed `|slope - constant|` for a fit over a decade or more of sizes.
pub const SLOPE_TOLERANCE: f64 = 5e-3;
pub const KS_MAX: f64 = 0.05;
pub const SKEWNESS_MAX: f64 = 0.2;
pub const EXCESS_KURTOSIS_MAX: f64 = 0.4;
pub const VARIANCE_RATIO_RANGE: (f64, f64) = (1.7, 2.3);
/// Normality gates are only evaluated with at least this many replicas.
pub const NORMALITY_MIN_REPLICAS: usize = 1000;
/// Positivity of the variance is only required from this size on.
pub const POSITIVITY_MIN_N: usize = 100;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GateResult {
    pub gate: String,
    pub n: usize,
    pub value: f64,
    pub bound: String,
    pub passed: bool,
}

/// Limit of `E[X_n]/n` where it is known in closed form.
pub fn reference_mean(model: Model, parameter: Parameter) -> Option<f64> {
    let mu = match model {
        Model::Bst => MU,
        Model::Rrt => MU_HAT,
        Model::Generic => return None,
    };
    match parameter {
        Parameter::Independence | Parameter::EdgeCover | Parameter::CliqueCover => Some(mu),
        Parameter::Matching | Parameter::VertexCover => Some(1.0 - mu),
        Parameter::Domination | Parameter::KDomination(_) => None,
    }
}

/// Evaluates every gate that applies to the experiment:
///
/// * mean: `|mean/n - c| ≤ 2e-3 + 3·SE/n` whenever `c` is known (the
///   standard-error term keeps small pilot-sized runs from failing on noise);
/// * slope: `|slope - c| ≤ 5e-3` when the sizes support a fit;
/// * normality: KS ≤ 0.05, |skewness| ≤ 0.2, |excess kurtosis| ≤ 0.4 with at
///   least 1000 replicas;
/// * variance linearity: `Var(2n)/Var(n) ∈ [1.7, 2.3]` for every size pair
///   `(n, 2n)` present;
/// * positivity: the 95% variance interval excludes 0 for `n ≥ 100`.
pub fn evaluate_gates(exp: &Experiment) -> Vec<GateResult> {
    let mut out = Vec::new();
    let reference = reference_mean(exp.spec.model, exp.spec.parameter);

    for s in exp.summaries() {
        if let Some(c) = reference {
            let dev = (s.mean_over_n - c).abs();
            let bound = MEAN_TOLERANCE + 3.0 * s.standard_error_of_mean / s.n as f64;
            out.push(GateResult {
                gate: "mean".into(),
                n: s.n,
                value: s.mean_over_n,
                bound: format!("|x - {c}| <= {bound:.6}"),
                passed: dev <= bound,
            });
        }
        if s.replicas >= NORMALITY_MIN_REPLICAS {
            let checks = [
                ("ks", s.ks_statistic, KS_MAX),
                ("skewness", s.sample_skewness, SKEWNESS_MAX),
                ("excess_kurtosis", s.excess_kurtosis, EXCESS_KURTOSIS_MAX),
            ];
            for (gate, value, max) in checks {
                let value = value.unwrap_or(f64::NAN);
                out.push(GateResult {
                    gate: gate.into(),
                    n: s.n,
                    value,
                    bound: format!("|x| <= {max}"),
                    passed: value.abs() <= max,
                });
            }
        }
        if s.n >= POSITIVITY_MIN_N {
            out.push(GateResult {
                gate: "variance_positive".into(),
                n: s.n,
                value: s.variance_over_n_ci.0,
                bound: "ci_low > 0".into(),
                passed: s.variance_over_n_ci.0 > 0.0,
            });
        }
    }

    let summaries: Vec<_> = exp.summaries().collect();
    for small in &summaries {
        if let Some(large) = summaries.iter().find(|l| l.n == 2 * small.n) {
            let ratio =
                variance_ratio(small.sample_variance, large.sample_variance).unwrap_or(f64::NAN);
            let (lo, hi) = VARIANCE_RATIO_RANGE;
            out.push(GateResult {
                gate: "variance_ratio".into(),
                n: small.n,
                value: ratio,
                bound: format!("{lo} <= x <= {hi}"),
                passed: (lo..=hi).contains(&ratio),
            });
        }
    }

    if let (Some(c), Ok(fit)) = (reference, exp.slope()) {
        out.push(GateResult {
            gate: "slope".into(),
            n: summaries.iter().map(|s| s.n).max().unwrap_or(0),
            value: fit.slope,
            bound: format!("|x - {c}| <= {SLOPE_TOLERANCE}"),
            passed: (fit.slope - c).abs() <= SLOPE_TOLERANCE,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mc::{run_experiment, ExperimentSpec};

    #[test]
    fn reference_means() {
        assert_eq!(
            reference_mean(Model::Bst, Parameter::Independence),
            Some(MU)
        );
        assert_eq!(
            reference_mean(Model::Rrt, Parameter::CliqueCover),
            Some(MU_HAT)
        );
        assert!(
            (reference_mean(Model::Bst, Parameter::Matching).unwrap() - (1.0 - MU)).abs() < 1e-15
        );
        assert_eq!(reference_mean(Model::Rrt, Parameter::Domination), None);
    }

    #[test]
    fn small_run_gates() {
        let spec = ExperimentSpec {
            model: Model::Rrt,
            parameter: Parameter::Independence,
            sizes: vec![200, 400, 2000],
            replicas: 50,
            master_seed: 1,
            workers: 2,
        };
        let gates = evaluate_gates(&run_experiment(&spec).unwrap());
        let names: Vec<&str> = gates.iter().map(|g| g.gate.as_str()).collect();
        assert!(
            names.contains(&"mean")
                && names.contains(&"slope")
                && names.contains(&"variance_ratio")
        );
        assert!(!names.contains(&"ks"));
        let mean_gates: Vec<_> = gates.iter().filter(|g| g.gate == "mean").collect();
        assert!(mean_gates.iter().all(|g| g.passed), "{mean_gates:?}");
    }
}
