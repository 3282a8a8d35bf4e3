//! Sample statistics: streaming moments, Kolmogorov-Smirnov distance to the
//! standard normal, least-squares slope, variance ratios.

use serde::Serialize;

use crate::error::{Error, Result};

/// One-pass central moments up to order four (Terriberry's extension of
/// Welford's update), numerically stable for large sample counts.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
    m3: f64,
    m4: f64,
}

impl Moments {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, x: f64) {
        let n1 = self.count as f64;
        self.count += 1;
        let n = self.count as f64;
        let delta = x - self.mean;
        let delta_n = delta / n;
        let delta_n2 = delta_n * delta_n;
        let term1 = delta * delta_n * n1;
        self.mean += delta_n;
        self.m4 += term1 * delta_n2 * (n * n - 3.0 * n + 3.0) + 6.0 * delta_n2 * self.m2
            - 4.0 * delta_n * self.m3;
        self.m3 += term1 * delta_n * (n - 2.0) - 3.0 * delta_n * self.m2;
        self.m2 += term1;
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Unbiased sample variance (0 for fewer than two samples).
    pub fn variance(&self) -> f64 {
        if self.count < 2 {
            0.0
        } else {
            (self.m2 / (self.count as f64 - 1.0)).max(0.0)
        }
    }

    /// Moment-ratio skewness `g1 = m3 / m2^{3/2}`.
    pub fn skewness(&self) -> f64 {
        let n = self.count as f64;
        (n.sqrt() * self.m3) / self.m2.powf(1.5)
    }

    /// Moment-ratio excess kurtosis `g2 = m4 / m2^2 - 3`.
    pub fn excess_kurtosis(&self) -> f64 {
        let n = self.count as f64;
        n * self.m4 / (self.m2 * self.m2) - 3.0
    }
}

impl FromIterator<f64> for Moments {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut m = Moments::new();
        for x in iter {
            m.push(x);
        }
        m
    }
}

/// Standard normal distribution function, `Φ(x) = erfc(-x/√2) / 2`, using
/// the fdlibm-derived `erfc` from `libm` (error of a few ulp, far below 1e-7).
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

/// `(x - mean) / sd` with the sample mean and unbiased standard deviation.
pub fn studentize(samples: &[f64]) -> Result<Vec<f64>> {
    let m: Moments = samples.iter().copied().collect();
    let sd = m.variance().sqrt();
    if sd.is_nan() || sd <= 0.0 {
        return Err(Error::Degenerate("samples have zero variance".into()));
    }
    Ok(samples.iter().map(|x| (x - m.mean()) / sd).collect())
}

/// Kolmogorov-Smirnov distance `sup |F_N - Φ|` of an (already studentized)
/// sample. Ties are handled because the supremum over a step function is
/// attained at the jump points.
pub fn ks_statistic(samples: &[f64]) -> f64 {
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    sorted.iter().enumerate().fold(0.0f64, |d, (i, &x)| {
        let f = normal_cdf(x);
        let above = (i as f64 + 1.0) / n - f;
        let below = f - i as f64 / n;
        d.max(above).max(below)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Normality {
    pub ks_statistic: f64,
    pub skewness: f64,
    pub excess_kurtosis: f64,
}

pub const MIN_NORMALITY_SAMPLES: usize = 100;

/// Studentizes the samples and measures their distance from normality.
pub fn normality_check(samples: &[f64]) -> Result<Normality> {
    if samples.len() < MIN_NORMALITY_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "normality check needs at least {MIN_NORMALITY_SAMPLES} samples, got {}",
            samples.len()
        )));
    }
    let z = studentize(samples)?;
    let m: Moments = samples.iter().copied().collect();
    Ok(Normality {
        ks_statistic: ks_statistic(&z),
        skewness: m.skewness(),
        excess_kurtosis: m.excess_kurtosis(),
    })
}

/// Least-squares line `mean ≈ slope · n + intercept`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SlopeEstimate {
    pub slope: f64,
    pub intercept: f64,
    pub residual_max: f64,
    /// Propagated from the per-size standard errors when those are given.
    pub slope_standard_error: Option<f64>,
}

/// A fitted point: size, sample mean and optionally its standard error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FitPoint {
    pub n: f64,
    pub mean: f64,
    pub standard_error: Option<f64>,
}

pub fn slope_fit(points: &[FitPoint]) -> Result<SlopeEstimate> {
    let mut sizes: Vec<f64> = points.iter().map(|p| p.n).collect();
    sizes.sort_by(f64::total_cmp);
    sizes.dedup();
    if sizes.len() < 3 {
        return Err(Error::InvalidArgument(format!(
            "slope fit needs at least 3 distinct sizes, got {}",
            sizes.len()
        )));
    }
    if sizes[sizes.len() - 1] < 10.0 * sizes[0] {
        return Err(Error::InvalidArgument(
            "slope fit sizes must span at least one decade".into(),
        ));
    }
    let k = points.len() as f64;
    let x_bar = points.iter().map(|p| p.n).sum::<f64>() / k;
    let y_bar = points.iter().map(|p| p.mean).sum::<f64>() / k;
    let sxx: f64 = points.iter().map(|p| (p.n - x_bar).powi(2)).sum();
    let sxy: f64 = points
        .iter()
        .map(|p| (p.n - x_bar) * (p.mean - y_bar))
        .sum();
    let slope = sxy / sxx;
    let intercept = y_bar - slope * x_bar;
    let residual_max = points
        .iter()
        .map(|p| (p.mean - slope * p.n - intercept).abs())
        .fold(0.0, f64::max);
    // slope = Σ w_i y_i with w_i = (x_i - x̄) / Sxx
    let slope_standard_error = points
        .iter()
        .map(|p| {
            p.standard_error
                .map(|se| ((p.n - x_bar) / sxx * se).powi(2))
        })
        .sum::<Option<f64>>()
        .map(f64::sqrt);
    Ok(SlopeEstimate {
        slope,
        intercept,
        residual_max,
        slope_standard_error,
    })
}

/// `Var(X_{2n}) / Var(X_n)`; linear variance growth predicts 2.
pub fn variance_ratio(variance_n: f64, variance_2n: f64) -> Result<f64> {
    if [variance_n, variance_2n]
        .iter()
        .any(|v| v.is_nan() || *v <= 0.0)
    {
        return Err(Error::Degenerate(
            "variance ratio needs positive variances".into(),
        ));
    }
    Ok(variance_2n / variance_n)
}

/// Normal-approximation 95% interval for the variance, using
/// `Var(s²) ≈ s⁴ (2/(N-1) + g2/N)`. With fewer than four samples the
/// interval is `[0, ∞)`.
pub fn variance_interval(m: &Moments) -> (f64, f64) {
    let n = m.count() as f64;
    let s2 = m.variance();
    if m.count() < 4 {
        return (0.0, f64::INFINITY);
    }
    if s2 == 0.0 {
        return (0.0, 0.0);
    }
    let rel = (2.0 / (n - 1.0) + m.excess_kurtosis() / n).max(0.0).sqrt();
    (s2 * (1.0 - 1.96 * rel), s2 * (1.0 + 1.96 * rel))
}
