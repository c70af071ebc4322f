//! The two integral families behind the symmetric sums: `I_{n,β}` over the
//! half line and `J_{n,β}` over the unit hypercube.

use crate::error::{domain, Result};
use crate::numerics::{
    beta_fn, c_prime, gamma_fn, hyp2f1_a1, integrate_semi_infinite, integrate_unit_hypercube,
    ln_gamma_fn, QuadratureConfig,
};

const SMALL_J_ARGUMENT: f64 = 1e-6;

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(domain("n", 0.0, "order must be at least 1"));
    }
    Ok(())
}

fn check_beta(beta: f64) -> Result<()> {
    if !(beta > 2.0) || !beta.is_finite() {
        return Err(domain("beta", beta, "path-loss exponent must satisfy beta > 2"));
    }
    Ok(())
}

/// `T_n = T / (1 - (n-1)T)`, or `None` once `T ≥ 1/(n-1)`, where no
/// `n` stations can simultaneously exceed SINR `T`.
pub fn threshold_transform(t: f64, n: usize) -> Option<f64> {
    let excess = (n.saturating_sub(1)) as f64 * t;
    if excess >= 1.0 {
        None
    } else {
        Some(t / (1.0 - excess))
    }
}

/// Number of non-vanishing symmetric sums at threshold `t` (`⌈1/T⌉`).
pub fn max_coverage_order(t: f64) -> usize {
    let mut n = 1;
    while threshold_transform(t, n + 1).is_some() {
        n += 1;
    }
    n
}

/// Log of `2^n / (β^{n-1} C'(β)^n (n-1)!)`.
fn ln_i_prefactor(n: usize, beta: f64) -> Result<f64> {
    let nf = n as f64;
    Ok(nf * std::f64::consts::LN_2 - (nf - 1.0) * beta.ln() - nf * c_prime(beta)?.ln() - ln_gamma_fn(nf)?)
}

/// `I_{n,β}(x)`, evaluated by quadrature of
///
/// ```text
/// 2ⁿ ∫₀^∞ u^{2n-1} exp(-u² - u^β x Γ(1-2/β)^{-β/2}) du / (β^{n-1} C'(β)ⁿ (n-1)!)
/// ```
pub fn calc_integral_i(n: usize, beta: f64, x: f64, cfg: &QuadratureConfig) -> Result<f64> {
    check_order(n)?;
    check_beta(beta)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain("x", x, "noise argument must be finite and >= 0"));
    }
    let noise_coeff = x * gamma_fn(1.0 - 2.0 / beta)?.powf(-beta / 2.0);
    let power = (2 * n - 1) as i32;
    let integral = integrate_semi_infinite(
        |u: f64| {
            if u <= 0.0 {
                return 0.0;
            }
            u.powi(power) * (-u * u - noise_coeff * u.powf(beta)).exp()
        },
        cfg,
    )?;
    Ok(integral * ln_i_prefactor(n, beta)?.exp())
}

/// Closed form `I_{n,β}(0) = 2^{n-1} / (β^{n-1} C'(β)ⁿ)`.
pub fn integral_i_at_zero(n: usize, beta: f64) -> Result<f64> {
    check_order(n)?;
    check_beta(beta)?;
    let nf = n as f64;
    Ok(2f64.powf(nf - 1.0) / (beta.powf(nf - 1.0) * c_prime(beta)?.powf(nf)))
}

/// Integrand of `J_{n,β}(x)` at `v ∈ [0,1]^{n-1}`:
///
/// ```text
/// ∏ v_i^{i(2/β+1)-1} (1-v_i)^{2/β} / ∏ (x + η_i),   η_i = (1-v_i) ∏_{k>i} v_k
/// ```
pub fn j_integrand(beta: f64, x: f64, v: &[f64]) -> f64 {
    let p = 2.0 / beta;
    let mut tail_product = 1.0;
    let mut value = 1.0;
    for (idx, &vi) in v.iter().enumerate().rev() {
        let i = (idx + 1) as f64;
        let eta = (1.0 - vi) * tail_product;
        value *= vi.powf(i * (p + 1.0) - 1.0) * (1.0 - vi).powf(p) / (x + eta);
        tail_product *= vi;
    }
    value
}

/// Closed form of `J_{2,β}(x)`:
/// `B(2/β+1, 2/β+1) ₂F₁(1, 2/β+1; 2(2/β+1); -1/x) / x`.
pub fn integral_j2_closed_form(beta: f64, x: f64, cfg: &QuadratureConfig) -> Result<f64> {
    check_beta(beta)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("x", x, "J requires a finite x > 0"));
    }
    let q = 2.0 / beta + 1.0;
    Ok(beta_fn(q, q)? * hyp2f1_a1(q, 2.0 * q, -1.0 / x, cfg)? / x)
}

/// `J_{n,β}(x)`.
///
/// `n = 1` is the empty integral (exactly 1) and `n = 2` uses the
/// hypergeometric closed form. For `n ≥ 3` the `(n-1)`-cube goes to
/// [`integrate_unit_hypercube`]: the tensor route takes the integrand as
/// written, while the sampling route first maps `v_i = s_i^{1/α_i}` with
/// `α_i = i(2/β+1)`, absorbing the `v_i^{α_i-1}` factor and cutting the
/// sampling variance by more than an order of magnitude.
pub fn calc_integral_j(n: usize, beta: f64, x: f64, cfg: &QuadratureConfig) -> Result<f64> {
    check_order(n)?;
    check_beta(beta)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("x", x, "J requires a finite x > 0"));
    }
    if x < SMALL_J_ARGUMENT {
        log::warn!("J_{n} evaluated at x = {x:e}; accuracy is not established below {SMALL_J_ARGUMENT:e}");
    }
    let d = n.saturating_sub(1);
    match n {
        1 => Ok(1.0),
        2 => integral_j2_closed_form(beta, x, cfg),
        _ if d <= cfg.tensor_max_dim => {
            Ok(integrate_unit_hypercube(|v: &[f64]| j_integrand(beta, x, v), d, cfg)?.value)
        }
        _ => {
            let p = 2.0 / beta;
            let exponents: Vec<f64> = (1..=d).map(|i| 1.0 / (i as f64 * (p + 1.0))).collect();
            let jacobian: f64 = exponents.iter().product();
            let estimate = integrate_unit_hypercube(
                |s: &[f64]| {
                    let mut tail_product = 1.0;
                    let mut value = 1.0;
                    for idx in (0..d).rev() {
                        let vi = s[idx].powf(exponents[idx]);
                        let one_minus = 1.0 - vi;
                        value *= one_minus.powf(p) / (x + one_minus * tail_product);
                        tail_product *= vi;
                    }
                    value
                },
                d,
                cfg,
            )?;
            Ok(jacobian * estimate.value)
        }
    }
}
