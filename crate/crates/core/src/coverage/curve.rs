use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::numerics::QuadratureConfig;

use super::{fading_coverage_probability, max_coverage_order, NetworkModel, SymmetricSums};

/// Which statistic a curve holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    /// `P{N(T) ≥ k}`
    KCoverage(usize),
    /// `P{N(T) = k}`
    Pmf(usize),
    /// Coverage probability under Rayleigh fading.
    Fading,
    /// `E[N(T)]`
    ExpectedCount,
}

impl CurveKind {
    pub fn is_probability(&self) -> bool {
        !matches!(self, CurveKind::ExpectedCount)
    }
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveKind::KCoverage(k) => write!(f, "k_coverage(k={k})"),
            CurveKind::Pmf(k) => write!(f, "pmf(k={k})"),
            CurveKind::Fading => f.write_str("fading"),
            CurveKind::ExpectedCount => f.write_str("expected_count"),
        }
    }
}

/// Analytic value of `kind` at one threshold.
pub fn evaluate_point(kind: CurveKind, t: f64, model: &NetworkModel, cfg: &QuadratureConfig) -> Result<f64> {
    match kind {
        CurveKind::Fading => fading_coverage_probability(t, model, cfg),
        CurveKind::KCoverage(k) | CurveKind::Pmf(k) if k > max_coverage_order(t) => Ok(0.0),
        CurveKind::KCoverage(0) => Ok(1.0),
        CurveKind::KCoverage(k) => Ok(SymmetricSums::compute(t, model, cfg)?.k_coverage(k)),
        CurveKind::Pmf(k) => Ok(SymmetricSums::compute(t, model, cfg)?.pmf(k)),
        CurveKind::ExpectedCount => super::expected_coverage(t, model, cfg),
    }
}

/// Evaluates every threshold independently (in parallel); results keep the
/// order of `thresholds`.
pub fn evaluate_points(
    kind: CurveKind,
    thresholds: &[f64],
    model: &NetworkModel,
    cfg: &QuadratureConfig,
) -> Vec<Result<f64>> {
    thresholds
        .par_iter()
        .map(|&t| evaluate_point(kind, t, model, cfg))
        .collect()
}

/// Analytic statistic sampled on a grid of linear-scale thresholds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverageCurve {
    pub kind: CurveKind,
    pub thresholds: Vec<f64>,
    pub values: Vec<f64>,
}

impl CoverageCurve {
    /// Fails on the first grid point whose evaluation fails.
    pub fn evaluate(
        kind: CurveKind,
        thresholds: &[f64],
        model: &NetworkModel,
        cfg: &QuadratureConfig,
    ) -> Result<Self> {
        let values = evaluate_points(kind, thresholds, model, cfg)
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            kind,
            thresholds: thresholds.to_vec(),
            values,
        })
    }

    /// `1 - value` at every point, the distribution-function view of a
    /// coverage (tail) probability.
    pub fn complement(&self) -> Vec<f64> {
        self.values.iter().map(|v| 1.0 - v).collect()
    }

    pub fn len(&self) -> usize {
        self.thresholds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thresholds.is_empty()
    }
}

/// The dB values `min_db, min_db + step, …` up to and including `max_db`.
pub fn db_grid(min_db: f64, max_db: f64, step_db: f64) -> Vec<f64> {
    let count = ((max_db - min_db) / step_db + 1e-9).floor() as usize + 1;
    (0..count).map(|i| min_db + i as f64 * step_db).collect()
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}
