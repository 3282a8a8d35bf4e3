use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl QuadratureResult {
    fn into_result(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NoConvergence {
                value: self.value,
                abs_error: self.abs_error_estimate,
                evaluations: self.evaluations,
            })
        }
    }
}

// 15-point Kronrod extension of the 7-point Gauss-Legendre rule on [-1, 1]
// (QUADPACK qk15). Odd entries of XK are the Gauss nodes.
#[allow(clippy::excessive_precision)]
const XK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Kronrod estimate on `[a, b]` with error `|K15 - G7|`, floored at the
/// rounding level `50 ε ∫|f|` of the panel.
fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WK[7];
    let mut gauss = fc * WG[3];
    let mut kronrod_abs = fc.abs() * WK[7];
    for j in 0..7 {
        let dx = half * XK[j];
        let (f1, f2) = (f(center - dx), f(center + dx));
        let pair = f1 + f2;
        kronrod += WK[j] * pair;
        kronrod_abs += WK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Panel {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half)
            .abs()
            .max(50.0 * f64::EPSILON * kronrod_abs * half.abs()),
    }
}

/// Globally adaptive Gauss-Kronrod (7/15) quadrature: the panel with the
/// largest error estimate is bisected until the summed estimate drops below
/// `abs_tol` or `max_evaluations` is exhausted. The reported error is the
/// sum of the per-panel `|K15 - G7|` differences.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    max_evaluations: usize,
) -> QuadratureResult {
    let mut heap = BinaryHeap::new();
    let first = gauss_kronrod(&f, a, b);
    let mut evaluations = 15;
    let mut value = first.value;
    let mut error = first.error;
    heap.push(first);

    while error > abs_tol && evaluations + 30 <= max_evaluations {
        let worst = heap.pop().expect("heap holds every panel");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // panel cannot be split further in floating point
            heap.push(worst);
            break;
        }
        let left = gauss_kronrod(&f, worst.a, mid);
        let right = gauss_kronrod(&f, mid, worst.b);
        evaluations += 30;
        heap.push(left);
        heap.push(right);
        // re-sum from scratch so cancellation in running updates cannot drift
        value = heap.iter().map(|p| p.value).sum();
        error = heap.iter().map(|p| p.error).sum();
    }

    QuadratureResult {
        value,
        abs_error_estimate: error,
        evaluations,
        converged: error <= abs_tol,
    }
}

const MAX_EVALUATIONS: usize = 200_000;

/// `2(√5 - 3) (x^√5 - 1) / ((3√5 - 7) x^√5 + 2)`, the integrand whose
/// integral over `[0, 1]` is the binary-search-tree constant.
pub fn mu_integrand(x: f64) -> f64 {
    let s5 = 5f64.sqrt();
    let xs = x.powf(s5);
    2.0 * (s5 - 3.0) * (xs - 1.0) / ((3.0 * s5 - 7.0) * xs + 2.0)
}

/// `e^{-t} / (1 + t)`: after `x = e^{-t}` the Euler-Gompertz integral
/// `∫_0^1 dx / (1 - log x)` becomes `∫_0^∞ e^{-t}/(1+t) dt`.
pub fn muhat_integrand(t: f64) -> f64 {
    (-t).exp() / (1.0 + t)
}

pub fn quadrature_mu(abs_tol: f64) -> Result<QuadratureResult> {
    integrate(mu_integrand, 0.0, 1.0, abs_tol, MAX_EVALUATIONS).into_result()
}

/// Integrates on `[0, T]` where the neglected tail `∫_T^∞ ≤ e^{-T}/(1+T)` is
/// below `1e-12`; that bound is added to the error estimate.
pub fn quadrature_muhat(abs_tol: f64) -> Result<QuadratureResult> {
    let mut cut = 1.0;
    while muhat_integrand(cut) >= 1e-12 {
        cut += 1.0;
    }
    let tail = muhat_integrand(cut);
    let mut r = integrate(muhat_integrand, 0.0, cut, abs_tol, MAX_EVALUATIONS);
    r.abs_error_estimate += tail;
    r.converged = r.abs_error_estimate <= abs_tol.max(2e-12);
    r.into_result()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronrod_is_exact_for_polynomials() {
        // both rules are exact through degree 13, so no refinement happens
        let r = integrate(|x| x.powi(13), 0.0, 1.0, 1e-14, 10_000);
        assert!((r.value - 1.0 / 14.0).abs() < 1e-15);
        assert_eq!(r.evaluations, 15);
        let r = integrate(|x| x.powi(29), 0.0, 1.0, 1e-14, 10_000);
        assert!((r.value - 1.0 / 30.0).abs() < 1e-15);
    }

    #[test]
    fn adapts_to_a_kink() {
        let r = integrate(|x: f64| (x - 0.3).abs(), 0.0, 1.0, 1e-12, 100_000);
        assert!(r.converged);
        assert!((r.value - 0.29).abs() < 1e-12);
    }

    #[test]
    fn reports_non_convergence() {
        let r = integrate(|x: f64| 1.0 / x.sqrt(), 0.0, 1.0, 1e-15, 60);
        assert!(!r.converged);
        assert!(matches!(r.into_result(), Err(Error::NoConvergence { .. })));
    }

    #[test]
    fn integrand_endpoints() {
        assert_eq!(mu_integrand(1.0), 0.0);
        assert_eq!(muhat_integrand(0.0), 1.0);
    }

    #[test]
    fn published_values() {
        let mu = quadrature_mu(1e-10).unwrap();
        assert!((mu.value - 0.54287631).abs() < 1e-8, "{}", mu.value);
        let muhat = quadrature_muhat(1e-10).unwrap();
        assert!((muhat.value - 0.59634736).abs() < 1e-8, "{}", muhat.value);
    }

    #[test]
    fn tightening_tolerance_stays_within_error_estimate() {
        for f in [quadrature_mu, quadrature_muhat] {
            let coarse = f(1e-6).unwrap();
            let fine = f(1e-10).unwrap();
            assert!((coarse.value - fine.value).abs() <= 1e-6);
            assert!(
                (coarse.value - fine.value).abs()
                    <= coarse.abs_error_estimate + fine.abs_error_estimate
            );
        }
    }
}
