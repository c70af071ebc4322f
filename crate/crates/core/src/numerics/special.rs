use std::f64::consts::PI;

use statrs::function::gamma::{gamma, ln_gamma};

use crate::error::{domain, Result};

/// Gamma function for positive real arguments.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("x", x, "gamma_fn requires a finite x > 0"));
    }
    Ok(gamma(x))
}

pub fn ln_gamma_fn(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("x", x, "ln_gamma_fn requires a finite x > 0"));
    }
    Ok(ln_gamma(x))
}

/// Euler beta function `B(a, b) = Γ(a)Γ(b)/Γ(a+b)`.
pub fn beta_fn(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(domain("a", a, "beta_fn requires a > 0"));
    }
    if !(b > 0.0) || !b.is_finite() {
        return Err(domain("b", b, "beta_fn requires b > 0"));
    }
    Ok((ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)).exp())
}

/// `C'(β) = 2π / (β sin(2π/β))`, which also equals `Γ(1-2/β)Γ(1+2/β)`.
///
/// Diverges as β approaches 2 from above and tends to 1 as β grows.
pub fn c_prime(beta: f64) -> Result<f64> {
    if !(beta > 2.0) || !beta.is_finite() {
        return Err(domain("beta", beta, "path-loss exponent must satisfy beta > 2"));
    }
    let angle = 2.0 * PI / beta;
    Ok(angle / angle.sin())
}
