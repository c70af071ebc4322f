use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerances and budgets shared by every numeric integration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Interval budget of the adaptive 1-D rule.
    pub max_subdivisions: usize,
    /// Total quasi-Monte-Carlo points for cubes above `tensor_max_dim`.
    pub hypercube_samples: usize,
    pub qmc_seed: u64,
    /// Largest dimension handled by tensor-product Gauss-Legendre.
    pub tensor_max_dim: usize,
    /// Point budget of the finest tensor rule.
    pub tensor_max_points: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-9,
            max_subdivisions: 1000,
            hypercube_samples: 1 << 16,
            qmc_seed: 0x5eed,
            tensor_max_dim: 4,
            tensor_max_points: 1 << 24,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !self.rel_tol.is_finite() {
            return Err(Error::Config(format!("rel_tol must be > 0, got {}", self.rel_tol)));
        }
        if !(self.abs_tol >= 0.0) || !self.abs_tol.is_finite() {
            return Err(Error::Config(format!("abs_tol must be >= 0, got {}", self.abs_tol)));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::Config("max_subdivisions must be positive".into()));
        }
        if self.hypercube_samples < 1000 {
            return Err(Error::Config(format!(
                "hypercube_samples must be at least 1000, got {}",
                self.hypercube_samples
            )));
        }
        if self.tensor_max_points < 16 {
            return Err(Error::Config("tensor_max_points must be at least 16".into()));
        }
        Ok(())
    }

    /// Accepted error for an estimate of magnitude `value`.
    pub fn tolerance_for(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}
