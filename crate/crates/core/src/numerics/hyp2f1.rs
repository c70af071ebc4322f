//! Gauss hypergeometric function with first parameter 1 on the negative
//! real axis.

use crate::error::{domain, Result};

use super::{integrate_interval, ln_gamma_fn, QuadratureConfig};

fn check_args(b: f64, c: f64, z: f64) -> Result<()> {
    if !(b > 0.0) || !b.is_finite() {
        return Err(domain("b", b, "hyp2f1_a1 requires b > 0"));
    }
    if !(c > b) || !c.is_finite() {
        return Err(domain("c", c, "hyp2f1_a1 requires c > b"));
    }
    if !(z <= 0.0) || !z.is_finite() {
        return Err(domain("z", z, "hyp2f1_a1 requires z <= 0"));
    }
    Ok(())
}

/// `₂F₁(1, b; c; z)` for `c > b > 0` and `z ≤ 0`, from the Euler integral
///
/// ```text
/// Γ(c) / (Γ(b)Γ(c-b)) ∫₀¹ t^{b-1} (1-t)^{c-b-1} / (1 - z t) dt
/// ```
///
/// The integral is split at 1/2 and each half is mapped with a power
/// substitution that absorbs its endpoint singularity.
pub fn hyp2f1_a1(b: f64, c: f64, z: f64, cfg: &QuadratureConfig) -> Result<f64> {
    check_args(b, c, z)?;
    if z == 0.0 {
        return Ok(1.0);
    }
    let e = c - b;
    // t = u^{1/b} on [0, 1/2]: t^{b-1} dt = du / b
    let left = integrate_interval(
        |u| {
            let t = u.powf(1.0 / b);
            (1.0 - t).powf(e - 1.0) / (1.0 - z * t)
        },
        0.0,
        0.5f64.powf(b),
        cfg,
    )? / b;
    // 1 - t = w^{1/e} on [1/2, 1]: (1-t)^{e-1} dt = -dw / e
    let right = integrate_interval(
        |w| {
            let t = 1.0 - w.powf(1.0 / e);
            t.powf(b - 1.0) / (1.0 - z * t)
        },
        0.0,
        0.5f64.powf(e),
        cfg,
    )? / e;
    let log_norm = ln_gamma_fn(c)? - ln_gamma_fn(b)? - ln_gamma_fn(e)?;
    Ok(log_norm.exp() * (left + right))
}

/// Power-series evaluation of `₂F₁(1, b; c; z)` for `z ≤ 0`.
///
/// For `|z| > 1/2` the Pfaff transformation
/// `₂F₁(1,b;c;z) = (1-z)^{-1} ₂F₁(1, c-b; c; z/(z-1))` moves the argument
/// into `[1/3, 1)` where the series converges. Kept as an independent
/// cross-check of [`hyp2f1_a1`].
pub fn hyp2f1_a1_series(b: f64, c: f64, z: f64) -> Result<f64> {
    check_args(b, c, z)?;
    let (prefactor, b_eff, w) = if z >= -0.5 {
        (1.0, b, z)
    } else {
        (1.0 / (1.0 - z), c - b, z / (z - 1.0))
    };
    // (1)_n / n! = 1, so term_{n+1} = term_n · (b+n)/(c+n) · w
    let mut sum = 1.0;
    let mut term = 1.0;
    for n in 0..100_000 {
        let k = n as f64;
        term *= (b_eff + k) / (c + k) * w;
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    Ok(prefactor * sum)
}
