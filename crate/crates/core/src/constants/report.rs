use serde::Serialize;

use super::*;
use crate::error::Result;

/// Largest `k` for which generating-function coefficients are compared with
/// the recursive-tree recurrence.
pub const GF_CHECK_TERMS: usize = 100;

/// Tolerance for the coefficient comparison.
pub const GF_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstantsReport {
    pub truncation: usize,
    pub tolerance: f64,
    pub mu_series: SeriesResult,
    pub mu_quadrature: QuadratureResult,
    pub muhat_series: SeriesResult,
    pub muhat_quadrature: QuadratureResult,
    /// `c_1 ..= c_K` of the closed-form generating function.
    pub muhat_gf_coeffs: Vec<f64>,
    pub gf_max_abs_deviation: f64,
    pub mu_agrees: bool,
    pub muhat_agrees: bool,
    pub gf_agrees: bool,
    pub quadrature_converged: bool,
}

impl ConstantsReport {
    pub fn all_pass(&self) -> bool {
        self.mu_agrees && self.muhat_agrees && self.gf_agrees && self.quadrature_converged
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

fn partial(r: Result<QuadratureResult>) -> Result<QuadratureResult> {
    match r {
        Err(crate::Error::NoConvergence {
            value,
            abs_error,
            evaluations,
        }) => Ok(QuadratureResult {
            value,
            abs_error_estimate: abs_error,
            evaluations,
            converged: false,
        }),
        other => other,
    }
}

/// Computes both constants every available way and cross-checks them. A
/// quadrature that fails to converge is kept in the report (flagged) rather
/// than turned into an error.
pub fn constants_report(truncation: usize, tolerance: f64) -> Result<ConstantsReport> {
    let bst = recurrence_bst(truncation);
    let rrt = recurrence_rrt(truncation)?;
    let mu_series = series_mu(&bst)?;
    let muhat_series = series_muhat(&rrt)?;
    let mu_quadrature = partial(quadrature_mu(tolerance))?;
    let muhat_quadrature = partial(quadrature_muhat(tolerance))?;

    let terms = truncation.min(GF_CHECK_TERMS);
    let coeffs = gf_coefficients(terms)?;
    let gf_max_abs_deviation = (1..=terms)
        .map(|k| (coeffs[k] - rrt.get(k).expect("k within truncation")).abs())
        .fold(0.0, f64::max);

    let agrees = |s: &SeriesResult, q: &QuadratureResult| {
        (s.partial_sum - q.value).abs() <= s.tail_bound + q.abs_error_estimate
    };
    Ok(ConstantsReport {
        truncation,
        tolerance,
        mu_agrees: agrees(&mu_series, &mu_quadrature),
        muhat_agrees: agrees(&muhat_series, &muhat_quadrature),
        gf_agrees: gf_max_abs_deviation <= GF_TOLERANCE,
        quadrature_converged: mu_quadrature.converged && muhat_quadrature.converged,
        mu_series,
        mu_quadrature,
        muhat_series,
        muhat_quadrature,
        muhat_gf_coeffs: coeffs[1..].to_vec(),
        gf_max_abs_deviation,
    })
}
