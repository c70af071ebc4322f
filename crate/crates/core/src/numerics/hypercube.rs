//! Integration over the unit hypercube `[0,1]^d`.
//!
//! Low dimensions use tensor-product Gauss-Legendre rules refined by factors
//! of 3/2 and 4/3; higher dimensions use Owen-scrambled Sobol points with
//! independent scrambles as replicates. The tensor route first pushes every
//! axis through the map `s ↦ s - sin(2πs)/2π`, whose derivative vanishes to
//! second order at both ends and tames endpoint singularities. The Sobol
//! route samples the cube directly: the same map would multiply the
//! variance by roughly `1.5^d`.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};

use super::QuadratureConfig;

const QMC_REPLICATES: usize = 8;
const QMC_MAX_PER_REPLICATE: usize = 1 << 16;

/// Cubature result together with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubatureEstimate {
    pub value: f64,
    /// Difference of the last two tensor rules, or the standard error over
    /// scrambled replicates.
    pub error: f64,
    pub evaluations: usize,
}

#[inline]
fn smooth_map(s: f64) -> (f64, f64) {
    let angle = 2.0 * PI * s;
    (s - angle.sin() / (2.0 * PI), 1.0 - angle.cos())
}

/// Gauss-Legendre nodes and weights on `[0, 1]`.
fn gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    let mf = m as f64;
    for i in 0..m.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (mf + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=m {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pm = if m == 1 { x } else { p1 };
            let pm_1 = if m == 1 { 1.0 } else { p0 };
            dp = mf * (x * pm - pm_1) / (x * x - 1.0);
            let dx = pm / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = 0.5 * (1.0 - x);
        nodes[m - 1 - i] = 0.5 * (1.0 + x);
        weights[i] = 0.5 * w;
        weights[m - 1 - i] = 0.5 * w;
    }
    (nodes, weights)
}

fn tensor_rule<F: Fn(&[f64]) -> f64>(f: &F, d: usize, m: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(m);
    let mapped: Vec<(f64, f64)> = nodes
        .iter()
        .zip(&weights)
        .map(|(&s, &w)| {
            let (v, jac) = smooth_map(s);
            (v, w * jac)
        })
        .collect();
    let mut index = vec![0usize; d];
    let mut point = vec![mapped[0].0; d];
    let mut total = 0.0;
    loop {
        let weight: f64 = index.iter().map(|&j| mapped[j].1).product();
        if weight != 0.0 {
            total += weight * f(&point);
        }
        // odometer increment
        let mut axis = 0;
        loop {
            if axis == d {
                return total;
            }
            index[axis] += 1;
            if index[axis] < m {
                point[axis] = mapped[index[axis]].0;
                break;
            }
            index[axis] = 0;
            point[axis] = mapped[0].0;
            axis += 1;
        }
    }
}

fn integrate_tensor<F: Fn(&[f64]) -> f64>(f: &F, d: usize, cfg: &QuadratureConfig) -> Result<CubatureEstimate> {
    let mut m = 8usize;
    let mut previous = tensor_rule(f, d, m);
    let mut evaluations = m.pow(d as u32);
    let mut levels = 1;
    loop {
        // 8, 12, 16, 24, 32, 48, ...
        let finer = if m.is_power_of_two() { 3 * m / 2 } else { 4 * m / 3 };
        let points = finer.checked_pow(d as u32).unwrap_or(usize::MAX);
        if points > cfg.tensor_max_points {
            return Err(Error::Convergence {
                limit: levels,
                estimate: previous,
                error: f64::NAN,
            });
        }
        let current = tensor_rule(f, d, finer);
        evaluations += points;
        levels += 1;
        let error = (current - previous).abs();
        if !current.is_finite() {
            return Err(Error::Convergence {
                limit: levels,
                estimate: current,
                error,
            });
        }
        if error <= cfg.tolerance_for(current) {
            return Ok(CubatureEstimate {
                value: current,
                error,
                evaluations,
            });
        }
        previous = current;
        m = finer;
    }
}

fn replicate_seed(base: u64, replicate: usize) -> u32 {
    // splitmix64 finalizer
    let mut z = base.wrapping_add(0x9e37_79b9_7f4a_7c15u64.wrapping_mul(replicate as u64 + 1));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    (z ^ (z >> 31)) as u32
}

fn integrate_qmc<F: Fn(&[f64]) -> f64>(f: &F, d: usize, cfg: &QuadratureConfig) -> Result<CubatureEstimate> {
    if d > 256 {
        return Err(domain("d", d as f64, "quasi-Monte-Carlo supports at most 256 dimensions"));
    }
    let per_replicate = (cfg.hypercube_samples / QMC_REPLICATES).clamp(1, QMC_MAX_PER_REPLICATE);
    let mut point = vec![0.0; d];
    let mut means = [0.0; QMC_REPLICATES];
    for (r, mean) in means.iter_mut().enumerate() {
        let seed = replicate_seed(cfg.qmc_seed, r);
        let mut sum = 0.0;
        for i in 0..per_replicate {
            for (dim, x) in point.iter_mut().enumerate() {
                // shift off the f32 grid so no coordinate lands exactly on 0
                *x = sobol_burley::sample(i as u32, dim as u32, seed) as f64 + 0.5f64.powi(25);
            }
            sum += f(&point);
        }
        *mean = sum / per_replicate as f64;
    }
    let r = QMC_REPLICATES as f64;
    let value = means.iter().sum::<f64>() / r;
    let var = means.iter().map(|m| (m - value).powi(2)).sum::<f64>() / (r - 1.0);
    let error = (var / r).sqrt();
    if !value.is_finite() {
        return Err(Error::Convergence {
            limit: QMC_REPLICATES,
            estimate: value,
            error,
        });
    }
    Ok(CubatureEstimate {
        value,
        error,
        evaluations: per_replicate * QMC_REPLICATES,
    })
}

/// Integral of `f` over `[0,1]^d`.
///
/// For `d ≤ cfg.tensor_max_dim` refines a tensor Gauss-Legendre rule until
/// two successive results agree to tolerance, failing with
/// [`Error::Convergence`] when the next rule would exceed
/// `tensor_max_points`. Above that dimension returns a scrambled Sobol
/// estimate whose `error` is the replicate standard error. Deterministic
/// given `cfg.qmc_seed`.
pub fn integrate_unit_hypercube<F: Fn(&[f64]) -> f64>(
    f: F,
    d: usize,
    cfg: &QuadratureConfig,
) -> Result<CubatureEstimate> {
    if d == 0 {
        return Err(domain("d", 0.0, "hypercube dimension must be at least 1"));
    }
    if d <= cfg.tensor_max_dim {
        integrate_tensor(&f, d, cfg)
    } else {
        integrate_qmc(&f, d, cfg)
    }
}
