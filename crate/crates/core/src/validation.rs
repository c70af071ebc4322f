//! Pointwise comparison of analytic values against Monte-Carlo estimates.

use std::fmt::Write as _;

use crate::simulator::Estimate;

/// A point agrees when `|z| ≤ Z_LIMIT`.
pub const Z_LIMIT: f64 = 3.0;
/// Fraction of agreeing points needed for a pass.
pub const PASS_FRACTION: f64 = 0.99;
/// Runs whose largest standard error exceeds this cannot resolve a
/// difference of a few percent and are flagged as low power.
pub const LOW_POWER_STD_ERROR: f64 = 0.01;

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationPoint {
    /// Label of the compared statistic, e.g. `k_coverage(k=1)`.
    pub kind: String,
    pub threshold: f64,
    pub analytic: f64,
    pub estimate: Estimate,
    pub z: f64,
}

/// Standard error used for z-scores of probability estimates.
///
/// When every trial gave the same indicator the sample standard error is 0
/// and any analytic value off 0 or 1 would get an infinite z-score. Such
/// runs are scored as if one more trial had disagreed, which gives about
/// `1/n`.
pub fn effective_std_error(e: &Estimate) -> f64 {
    if e.std_error > 0.0 || e.trials == 0 {
        return e.std_error;
    }
    let n = e.trials as f64 + 1.0;
    let p = 1.0 / n;
    (p * (1.0 - p) / n).sqrt()
}

impl ValidationPoint {
    pub fn new(kind: &str, threshold: f64, analytic: f64, estimate: Estimate) -> Self {
        let floored = Estimate {
            std_error: effective_std_error(&estimate),
            ..estimate
        };
        Self {
            kind: kind.to_string(),
            threshold,
            analytic,
            z: floored.z_score(analytic),
            estimate,
        }
    }

    pub fn agrees(&self) -> bool {
        self.z.abs() <= Z_LIMIT
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    pub points: Vec<ValidationPoint>,
}

impl ValidationReport {
    pub fn new(points: Vec<ValidationPoint>) -> Self {
        Self { points }
    }

    pub fn push_curve(&mut self, kind: &str, thresholds: &[f64], analytic: &[f64], estimates: &[Estimate]) {
        assert_eq!(thresholds.len(), analytic.len());
        assert_eq!(thresholds.len(), estimates.len());
        for ((&t, &a), &e) in thresholds.iter().zip(analytic).zip(estimates) {
            self.points.push(ValidationPoint::new(kind, t, a, e));
        }
    }

    pub fn agreeing(&self) -> usize {
        self.points.iter().filter(|p| p.agrees()).count()
    }

    pub fn fraction_agreeing(&self) -> f64 {
        if self.points.is_empty() {
            return 0.0;
        }
        self.agreeing() as f64 / self.points.len() as f64
    }

    /// At least [`PASS_FRACTION`] of the points within [`Z_LIMIT`]; an
    /// empty report fails.
    pub fn passed(&self) -> bool {
        !self.points.is_empty() && self.fraction_agreeing() >= PASS_FRACTION
    }

    pub fn max_abs_z(&self) -> f64 {
        self.points.iter().map(|p| p.z.abs()).fold(0.0, f64::max)
    }

    pub fn max_std_error(&self) -> f64 {
        self.points.iter().map(|p| p.estimate.std_error).fold(0.0, f64::max)
    }

    pub fn low_power(&self) -> bool {
        self.max_std_error() > LOW_POWER_STD_ERROR
    }

    /// One line of `key=value` pairs starting with `SUMMARY`.
    pub fn summary_line(&self) -> String {
        format!(
            "SUMMARY status={} points={} within_3sigma={} fraction={:.6} max_abs_z={:.4} max_std_error={:.3e} low_power={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.points.len(),
            self.agreeing(),
            self.fraction_agreeing(),
            self.max_abs_z(),
            self.max_std_error(),
            self.low_power(),
        )
    }

    /// Per-point table followed by the summary line. `header` lines are
    /// written first, each prefixed with `# `.
    pub fn render(&self, header: &[(String, String)]) -> String {
        let mut out = String::new();
        for (key, value) in header {
            let _ = writeln!(out, "# {key}: {value}");
        }
        let _ = writeln!(out, "kind\tT_dB\tT_linear\tanalytic\tsimulated\tstd_error\tz\tstatus");
        for p in &self.points {
            let _ = writeln!(
                out,
                "{}\t{:.4}\t{:.6e}\t{:.8}\t{:.8}\t{:.3e}\t{:.4}\t{}",
                p.kind,
                10.0 * p.threshold.log10(),
                p.threshold,
                p.analytic,
                p.estimate.mean,
                p.estimate.std_error,
                p.z,
                if p.agrees() { "ok" } else { "OUTSIDE" },
            );
        }
        if self.low_power() {
            let _ = writeln!(
                out,
                "# low power: largest standard error {:.3e} exceeds {LOW_POWER_STD_ERROR}; agreement is weak evidence",
                self.max_std_error()
            );
        }
        out.push_str(&self.summary_line());
        out.push('\n');
        out
    }
}
