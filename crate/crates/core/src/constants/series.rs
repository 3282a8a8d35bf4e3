use serde::Serialize;

use super::RecurrenceTable;
use crate::error::{Error, Result};
use crate::sum::CompensatedSum;
use crate::tree::Model;

/// A truncated series with a bound on the omitted tail.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeriesResult {
    pub partial_sum: f64,
    pub truncation: usize,
    pub tail_bound: f64,
}

impl SeriesResult {
    /// Whether `value` is consistent with this truncation: the full series
    /// lies in `[partial_sum, partial_sum + tail_bound]`.
    pub fn brackets(&self, value: f64, slack: f64) -> bool {
        value >= self.partial_sum - slack && value <= self.partial_sum + self.tail_bound + slack
    }
}

/// `μ ≈ Σ_{k=0}^{N} 2 p_k / ((k+1)(k+2))`. Since `p_k ≤ 1` the tail is at
/// most `Σ_{k>N} 2/((k+1)(k+2)) = 2/(N+2)`.
pub fn series_mu(table: &RecurrenceTable) -> Result<SeriesResult> {
    if table.model != Model::Bst {
        return Err(Error::WrongModel {
            expected: "binary search",
            actual: table.model.as_str(),
        });
    }
    let n = table.truncation();
    let sum: CompensatedSum = table
        .values
        .iter()
        .enumerate()
        .map(|(k, &p)| 2.0 * p / ((k as f64 + 1.0) * (k as f64 + 2.0)))
        .collect();
    Ok(SeriesResult {
        partial_sum: sum.value(),
        truncation: n,
        tail_bound: 2.0 / (n as f64 + 2.0),
    })
}

/// `μ̂ ≈ Σ_{k=1}^{N} p̂_k / (k(k+1))` with tail at most `1/(N+1)`.
pub fn series_muhat(table: &RecurrenceTable) -> Result<SeriesResult> {
    if table.model != Model::Rrt {
        return Err(Error::WrongModel {
            expected: "recursive",
            actual: table.model.as_str(),
        });
    }
    let n = table.truncation();
    let sum: CompensatedSum = table
        .values
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let k = (i + 1) as f64;
            p / (k * (k + 1.0))
        })
        .collect();
    Ok(SeriesResult {
        partial_sum: sum.value(),
        truncation: n,
        tail_bound: 1.0 / (n as f64 + 1.0),
    })
}
