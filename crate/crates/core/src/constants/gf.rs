use crate::error::{Error, Result};

/// Taylor coefficients `c_0 ..= c_N` of `z / ((1 - z)(1 - log(1 - z)))`,
/// obtained by power-series division: with `A(z) = (1 - z)(1 - log(1 - z))`
/// and `a_0 = 1`, `c_k = [k = 1] - Σ_{j=1}^{k} a_j c_{k-j}`.
pub fn gf_coefficients(truncation: usize) -> Result<Vec<f64>> {
    if truncation == 0 {
        return Err(Error::InvalidArgument(
            "need at least one coefficient".into(),
        ));
    }
    // 1 - log(1 - z) = 1 + Σ_{k≥1} z^k / k
    let b = |k: usize| if k == 0 { 1.0 } else { 1.0 / k as f64 };
    let a: Vec<f64> = (0..=truncation)
        .map(|k| if k == 0 { 1.0 } else { b(k) - b(k - 1) })
        .collect();
    let mut c = vec![0.0f64; truncation + 1];
    for k in 1..=truncation {
        let rhs = if k == 1 { 1.0 } else { 0.0 };
        let conv: f64 = (1..=k).map(|j| a[j] * c[k - j]).sum();
        c[k] = rhs - conv;
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_coefficients() {
        let c = gf_coefficients(3).unwrap();
        assert_eq!(c[0], 0.0);
        assert_eq!(c[1], 1.0);
        assert!(c[2].abs() < 1e-16);
        assert!((c[3] - 0.5).abs() < 1e-16);
        assert!(gf_coefficients(0).is_err());
    }
}
