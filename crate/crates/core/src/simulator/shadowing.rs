use std::f64::consts::LN_10;

use rand::Rng;
use rand_distr::{Exp1, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::numerics::gamma_fn;

/// Distribution of the i.i.d. shadowing marks, always normalized to `E[S] = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ShadowingSpec {
    /// `S = exp(σZ - σ²/2)` with `σ = sigma_db · ln(10)/10`.
    Lognormal { sigma_db: f64 },
    Exponential,
    Deterministic,
}

impl ShadowingSpec {
    pub fn validate(&self) -> Result<()> {
        if let ShadowingSpec::Lognormal { sigma_db } = *self {
            if !(sigma_db > 0.0) || !sigma_db.is_finite() {
                return Err(domain("sigma_db", sigma_db, "lognormal spread must be finite and > 0"));
            }
        }
        Ok(())
    }

    fn log_sigma(sigma_db: f64) -> f64 {
        sigma_db * LN_10 / 10.0
    }

    /// `E[S^q]` for `q ≥ 0`.
    pub fn moment(&self, q: f64) -> f64 {
        match *self {
            ShadowingSpec::Lognormal { sigma_db } => {
                let sigma = Self::log_sigma(sigma_db);
                (0.5 * sigma * sigma * q * (q - 1.0)).exp()
            }
            ShadowingSpec::Exponential => gamma_fn(1.0 + q).expect("1 + q > 0"),
            ShadowingSpec::Deterministic => 1.0,
        }
    }

    /// `E[S^{2/β}]`, the only shadowing statistic the analytic results use.
    pub fn s_moment(&self, beta: f64) -> f64 {
        self.moment(2.0 / beta)
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match *self {
            ShadowingSpec::Lognormal { sigma_db } => {
                let sigma = Self::log_sigma(sigma_db);
                let z: f64 = rng.sample(StandardNormal);
                (sigma * z - 0.5 * sigma * sigma).exp()
            }
            ShadowingSpec::Exponential => rng.sample(Exp1),
            ShadowingSpec::Deterministic => 1.0,
        }
    }
}
