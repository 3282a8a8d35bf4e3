use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::Model;

/// `E[f(T_k)]` for the independence toll, `k` up to the truncation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RecurrenceTable {
    pub model: Model,
    /// Index of `values[0]`: 0 for binary search trees, 1 for recursive trees.
    pub first_index: usize,
    pub values: Vec<f64>,
}

impl RecurrenceTable {
    pub fn truncation(&self) -> usize {
        self.first_index + self.values.len() - 1
    }

    pub fn get(&self, k: usize) -> Option<f64> {
        k.checked_sub(self.first_index)
            .and_then(|i| self.values.get(i).copied())
    }
}

/// `p_0 = 0`, `p_n = (1/n) Σ_{j<n} (1 - p_j)(1 - p_{n-1-j})`.
pub fn recurrence_bst(truncation: usize) -> RecurrenceTable {
    let mut p = vec![0.0f64; truncation + 1];
    let mut q = vec![1.0f64; truncation + 1];
    for n in 1..=truncation {
        let s: f64 = q[..n]
            .iter()
            .zip(q[..n].iter().rev())
            .map(|(a, b)| a * b)
            .sum();
        p[n] = s / n as f64;
        q[n] = 1.0 - p[n];
    }
    RecurrenceTable {
        model: Model::Bst,
        first_index: 0,
        values: p,
    }
}

/// `p̂_1 = 1`, `p̂_n = (1/(n-1)) Σ_{j=1}^{n-1} (1 - p̂_j) p̂_{n-j}`.
pub fn recurrence_rrt(truncation: usize) -> Result<RecurrenceTable> {
    if truncation == 0 {
        return Err(Error::InvalidArgument(
            "recursive-tree truncation must be at least 1".into(),
        ));
    }
    // index 0 is a zero pad so that p[k] is p̂_k
    let mut p = vec![0.0f64; truncation + 1];
    p[1] = 1.0;
    for n in 2..=truncation {
        let s: f64 = (1..n).map(|j| (1.0 - p[j]) * p[n - j]).sum();
        p[n] = s / (n - 1) as f64;
    }
    p.remove(0);
    Ok(RecurrenceTable {
        model: Model::Rrt,
        first_index: 1,
        values: p,
    })
}
