use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Physical parameters of a single-tier Poisson cellular network.
///
/// Path loss is `ℓ(r) = (K r)^β`; shadowing enters the analytic results only
/// through its moment `E[S^{2/β}]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkModel {
    /// Base-station density λ in stations per km².
    #[serde(rename = "lambda")]
    pub density: f64,
    /// Path-loss constant K in km⁻¹.
    #[serde(rename = "K")]
    pub path_loss_k: f64,
    /// Path-loss exponent β > 2.
    pub beta: f64,
    /// Noise power normalized by the transmit power.
    #[serde(rename = "W")]
    pub noise: f64,
    /// Shadowing moment `E[S^{2/β}]`.
    #[serde(rename = "s_moment")]
    pub shadow_moment: f64,
}

/// Scale `a` of the propagation process, whose intensity measure is
/// `Λ([0,t)) = a t^{2/β}`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PropagationConstant(pub f64);

impl NetworkModel {
    pub fn new(density: f64, path_loss_k: f64, beta: f64, noise: f64, shadow_moment: f64) -> Result<Self> {
        let model = Self {
            density,
            path_loss_k,
            beta,
            noise,
            shadow_moment,
        };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(domain(name, v, "must be finite and > 0"))
            }
        };
        positive("lambda", self.density)?;
        positive("K", self.path_loss_k)?;
        positive("s_moment", self.shadow_moment)?;
        if !(self.beta > 2.0) || !self.beta.is_finite() {
            return Err(domain("beta", self.beta, "path-loss exponent must satisfy beta > 2"));
        }
        if !(self.noise >= 0.0) || !self.noise.is_finite() {
            return Err(domain("W", self.noise, "noise must be finite and >= 0"));
        }
        Ok(())
    }

    /// `a = λ π E[S^{2/β}] / K²`.
    pub fn propagation_constant(&self) -> PropagationConstant {
        PropagationConstant(self.density * PI * self.shadow_moment / (self.path_loss_k * self.path_loss_k))
    }

    /// Noise argument `W a^{-β/2}` fed to the I-family integral.
    pub fn noise_argument(&self) -> f64 {
        let a = self.propagation_constant().0;
        self.noise * a.powf(-self.beta / 2.0)
    }

    /// Same network with the noise switched off (SIR instead of SINR).
    pub fn without_noise(&self) -> Self {
        Self { noise: 0.0, ..*self }
    }
}

/// Free-function form of [`NetworkModel::propagation_constant`].
pub fn propagation_constant(model: &NetworkModel) -> PropagationConstant {
    model.propagation_constant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn unit_model_gives_pi() {
        let m = NetworkModel::new(1.0, 1.0, 4.0, 0.0, 1.0).unwrap();
        assert_relative_eq!(m.propagation_constant().0, PI, max_relative = 1e-15);
    }

    #[test]
    fn urban_constant() {
        let m = NetworkModel::new(4.619, 6910.0, 3.8, 0.0, 0.516).unwrap();
        // 4.619·π·0.516 / 6910² by hand
        assert_relative_eq!(m.propagation_constant().0, 1.568_2e-7, max_relative = 1e-4);
    }

    #[test]
    fn linear_in_density() {
        let m = NetworkModel::new(0.3, 2.0, 3.0, 0.1, 0.7).unwrap();
        let m2 = NetworkModel {
            density: 0.6,
            ..m
        };
        assert_relative_eq!(
            m2.propagation_constant().0,
            2.0 * m.propagation_constant().0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn rejects_invalid() {
        assert!(NetworkModel::new(1.0, 1.0, 2.0, 0.0, 1.0).is_err());
        assert!(NetworkModel::new(0.0, 1.0, 3.0, 0.0, 1.0).is_err());
        assert!(NetworkModel::new(1.0, -1.0, 3.0, 0.0, 1.0).is_err());
        assert!(NetworkModel::new(1.0, 1.0, 3.0, -1e-9, 1.0).is_err());
        assert!(NetworkModel::new(1.0, 1.0, 3.0, 0.0, 0.0).is_err());
    }
}
