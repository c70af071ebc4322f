//! Adaptive Gauss-Kronrod (10/21 point) quadrature on finite intervals and
//! Gaussian-tailed integrands on the half line.

use crate::error::{Error, Result};

use super::QuadratureConfig;

const XGK: [f64; 11] = [
    0.995_657_163_025_808_1,
    0.973_906_528_517_171_7,
    0.930_157_491_355_708_2,
    0.865_063_366_688_984_5,
    0.780_817_726_586_416_9,
    0.679_409_568_299_024_4,
    0.562_757_134_668_604_7,
    0.433_395_394_129_247_2,
    0.294_392_862_701_460_2,
    0.148_874_338_981_631_22,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874,
    0.032_558_162_307_964_725,
    0.054_755_896_574_351_995,
    0.075_039_674_810_919_96,
    0.093_125_454_583_697_6,
    0.109_387_158_802_297_64,
    0.123_491_976_262_065_84,
    0.134_709_217_311_473_34,
    0.142_775_938_577_060_09,
    0.147_739_104_901_338_49,
    0.149_445_554_002_916_9,
];

// Gauss weights for the odd-indexed Kronrod abscissae.
const WG: [f64; 5] = [
    0.066_671_344_308_688_14,
    0.149_451_349_150_580_6,
    0.219_086_362_515_982_04,
    0.269_266_719_309_996_35,
    0.295_524_224_714_752_87,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut err = err.abs();
    if res_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    err
}

fn qk21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut res_k = WGK[10] * f_center;
    let mut res_g = 0.0;
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (f_center - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = res_k * half;
    let error = rescale_error((res_k - res_g) * half, res_abs * half.abs(), res_asc * half.abs());
    Segment { a, b, value, error }
}

/// Globally adaptive Gauss-Kronrod quadrature of `f` over `[a, b]`.
///
/// Bisects the interval with the largest error estimate until the summed
/// error falls under `max(abs_tol, rel_tol·|I|)`. Fails with
/// [`Error::Convergence`] once `max_subdivisions` intervals are in use.
pub fn integrate_interval<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let mut segments = vec![qk21(&f, a, b)];
    loop {
        let total: f64 = segments.iter().map(|s| s.value).sum();
        let error: f64 = segments.iter().map(|s| s.error).sum();
        if !total.is_finite() {
            return Err(Error::Convergence {
                limit: segments.len(),
                estimate: total,
                error,
            });
        }
        if error <= cfg.tolerance_for(total) {
            return Ok(total);
        }
        if segments.len() >= cfg.max_subdivisions {
            return Err(Error::Convergence {
                limit: cfg.max_subdivisions,
                estimate: total,
                error,
            });
        }
        let (worst, _) = segments
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .expect("at least one segment");
        let seg = segments.swap_remove(worst);
        let mid = 0.5 * (seg.a + seg.b);
        if mid <= seg.a || mid >= seg.b {
            // interval can no longer be split in floating point
            return Err(Error::Convergence {
                limit: segments.len() + 1,
                estimate: total,
                error,
            });
        }
        segments.push(qk21(&f, seg.a, mid));
        segments.push(qk21(&f, mid, seg.b));
    }
}

const CUTOFF_STEP: f64 = 0.25;
const CUTOFF_LIMIT: f64 = 1e3;

/// Truncation point for a Gaussian-tailed integrand on `[0, ∞)`.
///
/// Walks outward until `|f(u)|/u` drops below `abs_tol/10` while `f` is
/// decreasing; for `f ≲ poly(u)·e^{-u²}` the neglected tail is then bounded
/// by roughly `|f(u)|/(2u)`.
pub fn semi_infinite_cutoff<F: Fn(f64) -> f64>(f: &F, cfg: &QuadratureConfig) -> Result<f64> {
    let target = cfg.abs_tol.max(1e-300) / 10.0;
    let mut u = 1.0;
    let mut current = f(u).abs();
    loop {
        let next = f(u + CUTOFF_STEP).abs();
        if current / u < target && next <= current {
            return Ok(u);
        }
        if !current.is_finite() || u > CUTOFF_LIMIT {
            return Err(Error::NonDecaying { at: u, value: current });
        }
        u += CUTOFF_STEP;
        current = next;
    }
}

/// Integral of a Gaussian-tailed integrand over `[0, ∞)`.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(f: F, cfg: &QuadratureConfig) -> Result<f64> {
    let upper = semi_infinite_cutoff(&f, cfg)?;
    integrate_interval(f, 0.0, upper, cfg)
}
