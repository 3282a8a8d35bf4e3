//! The mean-growth constants of the independence number, computed by three
//! independent routes: probability recurrences summed as series with
//! rigorous tail bounds, adaptive quadrature of integral representations,
//! and power-series expansion of the closed-form generating function.

mod gf;
mod quadrature;
mod recurrence;
mod report;
mod series;

pub use gf::gf_coefficients;
pub use quadrature::{
    integrate, mu_integrand, muhat_integrand, quadrature_mu, quadrature_muhat, QuadratureResult,
};
pub use recurrence::{recurrence_bst, recurrence_rrt, RecurrenceTable};
pub use report::{constants_report, ConstantsReport};
pub use series::{series_mu, series_muhat, SeriesResult};

/// Mean independence-number growth of random binary search trees, to the
/// eight published decimals.
pub const MU: f64 = 0.54287631;

/// Euler-Gompertz constant, the growth constant for random recursive trees,
/// to the eight published decimals.
pub const MU_HAT: f64 = 0.59634736;

/// Default series truncation.
pub const DEFAULT_TRUNCATION: usize = 20_000;

/// Default absolute quadrature tolerance.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
