//! Symmetric sums `S_n(T)` and the coverage statistics obtained from them
//! by inclusion-exclusion.

use crate::error::{domain, Result};
use crate::numerics::QuadratureConfig;

use super::integrals::{calc_integral_i, calc_integral_j, max_coverage_order, threshold_transform};
use super::NetworkModel;

fn check_threshold(t: f64) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(domain("T", t, "SINR threshold must be finite and > 0"));
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn clamp_probability(raw: f64, what: &str) -> f64 {
    if !(0.0..=1.0).contains(&raw) {
        log::debug!("{what}: clamping raw value {raw:e} into [0, 1]");
    }
    raw.clamp(0.0, 1.0)
}

/// `S_n(T) = T_n^{-2n/β} I_{n,β}(W a^{-β/2}) J_{n,β}(T_n)` for `T < 1/(n-1)`,
/// and 0 otherwise.
pub fn symmetric_sum(n: usize, t: f64, model: &NetworkModel, cfg: &QuadratureConfig) -> Result<f64> {
    check_threshold(t)?;
    model.validate()?;
    if n == 0 {
        return Ok(1.0);
    }
    let Some(t_n) = threshold_transform(t, n) else {
        return Ok(0.0);
    };
    let beta = model.beta;
    let i_value = calc_integral_i(n, beta, model.noise_argument(), cfg)?;
    let j_value = calc_integral_j(n, beta, t_n, cfg)?;
    Ok(t_n.powf(-2.0 * n as f64 / beta) * i_value * j_value)
}

/// All non-vanishing symmetric sums at one threshold, `S_0 = 1` through
/// `S_{⌈1/T⌉}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricSums {
    threshold: f64,
    values: Vec<f64>,
}

impl SymmetricSums {
    pub fn compute(t: f64, model: &NetworkModel, cfg: &QuadratureConfig) -> Result<Self> {
        check_threshold(t)?;
        let order = max_coverage_order(t);
        let mut values = Vec::with_capacity(order + 1);
        values.push(1.0);
        for n in 1..=order {
            values.push(symmetric_sum(n, t, model, cfg)?);
        }
        Ok(Self { threshold: t, values })
    }

    /// Builds from precomputed `S_1, S_2, …`; mostly useful for tests.
    pub fn from_values(t: f64, sums: &[f64]) -> Self {
        let mut values = vec![1.0];
        values.extend_from_slice(sums);
        Self { threshold: t, values }
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    /// Largest `n` with a stored, possibly non-zero, `S_n`.
    pub fn max_order(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> f64 {
        self.values.get(n).copied().unwrap_or(0.0)
    }

    /// `Σ_{n≥k} (-1)^{n-k} C(n-1, k-1) S_n` before clamping.
    pub fn k_coverage_raw(&self, k: usize) -> f64 {
        if k == 0 {
            return 1.0;
        }
        (k..=self.max_order())
            .map(|n| {
                let sign = if (n - k).is_multiple_of(2) { 1.0 } else { -1.0 };
                sign * binomial(n - 1, k - 1) * self.values[n]
            })
            .sum()
    }

    /// `P{N(T) ≥ k}`.
    pub fn k_coverage(&self, k: usize) -> f64 {
        clamp_probability(self.k_coverage_raw(k), "k-coverage")
    }

    /// `Σ_{n≥k} (-1)^{n-k} C(n, k) S_n` before clamping.
    pub fn pmf_raw(&self, k: usize) -> f64 {
        if k == 0 {
            return 1.0 - self.k_coverage_raw(1);
        }
        (k..=self.max_order())
            .map(|n| {
                let sign = if (n - k).is_multiple_of(2) { 1.0 } else { -1.0 };
                sign * binomial(n, k) * self.values[n]
            })
            .sum()
    }

    /// `P{N(T) = k}`.
    pub fn pmf(&self, k: usize) -> f64 {
        clamp_probability(self.pmf_raw(k), "coverage pmf")
    }

    /// `E[z^{N(T)}] = Σ_n (z-1)^n S_n`.
    pub fn pgf(&self, z: f64) -> f64 {
        let w = z - 1.0;
        let raw: f64 = self
            .values
            .iter()
            .enumerate()
            .map(|(n, s)| w.powi(n as i32) * s)
            .sum();
        clamp_probability(raw, "coverage pgf")
    }

    /// `d/dz E[z^{N(T)}] = Σ_n n (z-1)^{n-1} S_n`, unclamped.
    pub fn pgf_derivative(&self, z: f64) -> f64 {
        let w = z - 1.0;
        self.values
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, s)| n as f64 * w.powi(n as i32 - 1) * s)
            .sum()
    }

    /// `E[N(T)] = S_1(T)`.
    pub fn expected_count(&self) -> f64 {
        self.get(1)
    }
}

pub fn k_coverage_probability(k: usize, t: f64, model: &NetworkModel, cfg: &QuadratureConfig) -> Result<f64> {
    if k == 0 {
        return Err(domain("k", 0.0, "k-coverage requires k >= 1"));
    }
    check_threshold(t)?;
    if k > max_coverage_order(t) {
        return Ok(0.0);
    }
    Ok(SymmetricSums::compute(t, model, cfg)?.k_coverage(k))
}

pub fn coverage_pmf(k: usize, t: f64, model: &NetworkModel, cfg: &QuadratureConfig) -> Result<f64> {
    check_threshold(t)?;
    if k > max_coverage_order(t) {
        return Ok(0.0);
    }
    Ok(SymmetricSums::compute(t, model, cfg)?.pmf(k))
}

pub fn coverage_pgf(z: f64, t: f64, model: &NetworkModel, cfg: &QuadratureConfig) -> Result<f64> {
    if !(0.0..=1.0).contains(&z) {
        return Err(domain("z", z, "generating function argument must lie in [0, 1]"));
    }
    Ok(SymmetricSums::compute(t, model, cfg)?.pgf(z))
}

pub fn expected_coverage(t: f64, model: &NetworkModel, cfg: &QuadratureConfig) -> Result<f64> {
    symmetric_sum(1, t, model, cfg)
}
