#![allow(dead_code)]

//! Test-only oracles that share no code with the library's integrators.

/// Tanh-sinh nodes and weights on `[0, 1]` with step `h`. Nodes that round
/// to an endpoint are dropped.
pub fn tanh_sinh_rule(h: f64) -> Vec<(f64, f64)> {
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut rule = Vec::new();
    let steps = (4.0 / h).ceil() as i64;
    for k in -steps..=steps {
        let t = k as f64 * h;
        let u = half_pi * t.sinh();
        // x = (1 + tanh u)/2 = 1/(1 + e^{-2u})
        let x = 1.0 / (1.0 + (-2.0 * u).exp());
        let w = h * half_pi * t.cosh() / (2.0 * u.cosh().powi(2));
        if x <= 0.0 || x >= 1.0 || w < 1e-300 || !w.is_finite() {
            continue;
        }
        rule.push((x, w));
    }
    rule
}

/// Iterated tanh-sinh cubature over `[0,1]^d`.
pub fn tanh_sinh_cube<F: Fn(&[f64]) -> f64>(f: &F, d: usize, h: f64) -> f64 {
    let rule = tanh_sinh_rule(h);
    let mut point = vec![0.0; d];
    fn recurse<F: Fn(&[f64]) -> f64>(f: &F, rule: &[(f64, f64)], point: &mut Vec<f64>, axis: usize) -> f64 {
        if axis == point.len() {
            return f(point);
        }
        let mut sum = 0.0;
        for &(x, w) in rule {
            point[axis] = x;
            sum += w * recurse(f, rule, point, axis + 1);
        }
        sum
    }
    recurse(f, &rule, &mut point, 0)
}

/// `J_{n,β}(x)` straight from its defining integrand, by tanh-sinh.
pub fn j_oracle(n: usize, beta: f64, x: f64, h: f64) -> f64 {
    if n == 1 {
        return 1.0;
    }
    let p = 2.0 / beta;
    let f = |v: &[f64]| {
        let mut tail = 1.0;
        let mut value = 1.0;
        for idx in (0..v.len()).rev() {
            let i = (idx + 1) as f64;
            value *= v[idx].powf(i * (p + 1.0) - 1.0) * (1.0 - v[idx]).powf(p) / (x + (1.0 - v[idx]) * tail);
            tail *= v[idx];
        }
        value
    };
    tanh_sinh_cube(&f, n - 1, h)
}

/// `∫₀^∞ f(u) du` by tanh-sinh after `u = s/(1-s)`.
pub fn tanh_sinh_half_line<F: Fn(f64) -> f64>(f: F, h: f64) -> f64 {
    tanh_sinh_rule(h)
        .into_iter()
        .map(|(s, w)| {
            let one_minus = 1.0 - s;
            w * f(s / one_minus) / (one_minus * one_minus)
        })
        .sum()
}

/// `C'(β) = 2π / (β sin(2π/β))`.
pub fn c_prime(beta: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    two_pi / (beta * (two_pi / beta).sin())
}

fn ln_factorial(n: usize) -> f64 {
    (1..=n).map(|i| (i as f64).ln()).sum()
}

/// `I_{n,β}(x)` from its defining integral, with `Γ(1-2/β)` supplied by the
/// caller.
pub fn i_oracle(n: usize, beta: f64, x: f64, gamma_one_minus_p: f64, h: f64) -> f64 {
    let coeff = x * gamma_one_minus_p.powf(-beta / 2.0);
    let integral = tanh_sinh_half_line(
        |u| u.powi(2 * n as i32 - 1) * (-u * u - coeff * u.powf(beta)).exp(),
        h,
    );
    let nf = n as f64;
    let ln_prefactor = nf * 2f64.ln() - (nf - 1.0) * beta.ln() - nf * c_prime(beta).ln() - ln_factorial(n - 1);
    integral * ln_prefactor.exp()
}
