//! Exact tree parameters, fringe functionals, limit constants and Monte Carlo
//! checks for random binary search trees and random recursive trees.
//!
//! The crate is organised bottom-up:
//!
//! * [`tree`]: arena-stored rooted trees in generation order.
//! * [`rng`] and [`gen`]: pinned, seedable generators for the two random models.
//! * [`params`]: linear-time independence, domination and k-domination numbers
//!   plus the parameters that are affine in the independence number.
//! * [`fringe`]: additive fringe functionals `F(T; f) = Σ_v f(T(v))`.
//! * [`constants`]: recurrences, series, quadrature and generating-function
//!   coefficients for the mean-growth constants.
//! * [`mc`]: deterministic (optionally parallel) Monte Carlo experiments and
//!   the statistics used to check the limit laws.
//! * [`oracle`]: brute-force reference implementations.

pub mod constants;
pub mod error;
pub mod fringe;
pub mod gen;
pub mod mc;
pub mod oracle;
pub mod params;
pub mod rng;
pub mod sum;
pub mod tree;

pub use error::{Error, Result};
pub use tree::{Model, NodeId, RootedTree};
