//! Exact linear-time graph parameters of rooted trees.

mod domination;
mod independence;
mod kdom;
mod report;

pub use domination::{domination, DominationResult};
pub use independence::{independence, layered_stripping, IndependenceResult};
pub use kdom::k_domination;
pub use report::{full_report, ParameterReport};
