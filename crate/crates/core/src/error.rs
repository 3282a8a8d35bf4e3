use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("malformed tree file: {0}")]
    Parse(String),

    #[error("operation requires a {expected} tree, got {actual}")]
    WrongModel {
        expected: &'static str,
        actual: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{k}-domination is only defined for binary search trees with k <= 3")]
    KTooLargeForBst { k: usize },

    #[error("oracle budget exceeded: n = {n} > {max}")]
    BudgetExceeded { n: usize, max: usize },

    #[error("quadrature did not converge: estimate {value} with error {abs_error} after {evaluations} evaluations")]
    NoConvergence {
        value: f64,
        abs_error: f64,
        evaluations: usize,
    },

    #[error("degenerate sample: {0}")]
    Degenerate(String),

    #[error("replica {replica} at n = {n} failed: {reason}")]
    Replica {
        n: usize,
        replica: u64,
        reason: String,
    },
}
