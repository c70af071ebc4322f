//! Coverage probability under Rayleigh fading, where fading perturbs the
//! SINR test but not the choice of the serving station.

use crate::error::{domain, Result};
use crate::numerics::{hyp2f1_a1, integrate_semi_infinite, QuadratureConfig};

use super::NetworkModel;

/// `(2/β) T ₂F₁(1, 1-2/β; 2-2/β; -T) / (1-2/β)`, constant in the
/// integration variable.
fn interference_exponent(t: f64, beta: f64, cfg: &QuadratureConfig) -> Result<f64> {
    let p = 2.0 / beta;
    let f = hyp2f1_a1(1.0 - p, 2.0 - p, -t, cfg)?;
    Ok(p * t * f / (1.0 - p))
}

fn check(t: f64, model: &NetworkModel) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(domain("T", t, "SINR threshold must be finite and > 0"));
    }
    model.validate()
}

/// Numeric evaluation of
///
/// ```text
/// (2/β) ∫₀^∞ t^{2/β-1} e^{-t T W a^{-β/2}} e^{-(1+c) t^{2/β}} dt
/// ```
///
/// after the substitution `t = u^β`, which gives
/// `∫₀^∞ 2u e^{-(1+c)u² - T W a^{-β/2} u^β} du`. Used for every `W`,
/// including `W = 0` where it must reproduce the closed form.
pub fn fading_coverage_integral(t: f64, model: &NetworkModel, cfg: &QuadratureConfig) -> Result<f64> {
    check(t, model)?;
    let c = interference_exponent(t, model.beta, cfg)?;
    let noise = t * model.noise_argument();
    let beta = model.beta;
    integrate_semi_infinite(
        |u: f64| 2.0 * u * (-(1.0 + c) * u * u - noise * u.powf(beta)).exp(),
        cfg,
    )
}

/// Interference-limited closed form `1 / (1 + c)`.
pub fn fading_coverage_closed_form(t: f64, beta: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if !(beta > 2.0) || !beta.is_finite() {
        return Err(domain("beta", beta, "path-loss exponent must satisfy beta > 2"));
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(domain("T", t, "SINR threshold must be finite and > 0"));
    }
    Ok(1.0 / (1.0 + interference_exponent(t, beta, cfg)?))
}

/// Probability that the strongest (fading-averaged) station still exceeds
/// SINR `t` once its signal and all interferers carry unit-mean
/// exponential fading.
pub fn fading_coverage_probability(t: f64, model: &NetworkModel, cfg: &QuadratureConfig) -> Result<f64> {
    check(t, model)?;
    if model.noise == 0.0 {
        fading_coverage_closed_form(t, model.beta, cfg)
    } else {
        fading_coverage_integral(t, model, cfg)
    }
}
