//! Command-line front end: scenario files, grids, CSV and validation
//! reports. The `multicov` binary only parses arguments and calls [`run`].

pub mod csv;
mod scenario;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::coverage::{db_grid, db_to_linear, evaluate_points, CurveKind};
use crate::error::{Error, Result};
use crate::numerics::QuadratureConfig;
use crate::simulator::{simulate, Estimate, ScenarioConfig, SimulationMode, MAX_TRUNCATION_BIAS};
use crate::validation::ValidationReport;

pub use csv::{CsvRow, Source};
pub use scenario::{
    load_scenario, parse_scenario, preset_by_name, serialize_scenario, suburban, urban, DEFAULT_SEED, DEFAULT_TRIALS,
};

pub const THREADS_ENV: &str = "MULTICOV_THREADS";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAIL: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Analytic `1 - P{N(T) ≥ k}`.
    Curve,
    /// Analytic `P{N(T) = k}`.
    Pmf,
    /// Analytic `1 - P̃_c(T)`.
    Fading,
    /// Analytic against simulated, with z-scores.
    Validate,
    /// Simulated `1 - P{N(T) ≥ k}` (and `1 - P̃_c` when the scenario has
    /// fading) with standard errors.
    Simulate,
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "curve" => Ok(Command::Curve),
            "pmf" => Ok(Command::Pmf),
            "fading" => Ok(Command::Fading),
            "validate" => Ok(Command::Validate),
            "simulate" => Ok(Command::Simulate),
            other => Err(Error::Config(format!(
                "unknown command {other:?}; expected curve, pmf, fading, validate or simulate"
            ))),
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Command::Curve => "curve",
            Command::Pmf => "pmf",
            Command::Fading => "fading",
            Command::Validate => "validate",
            Command::Simulate => "simulate",
        })
    }
}

/// Thresholds `min_db, min_db + step_db, …, ≤ max_db` in dB.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DbGrid {
    pub min_db: f64,
    pub max_db: f64,
    pub step_db: f64,
}

impl DbGrid {
    /// `min_db == max_db` gives a single point.
    pub fn new(min_db: f64, max_db: f64, step_db: f64) -> Result<Self> {
        if !min_db.is_finite() || !max_db.is_finite() {
            return Err(Error::Config(format!("grid bounds must be finite, got [{min_db}, {max_db}]")));
        }
        if min_db > max_db {
            return Err(Error::Config(format!("--tmin-db {min_db} exceeds --tmax-db {max_db}")));
        }
        if !(step_db > 0.0) || !step_db.is_finite() {
            return Err(Error::Config(format!("--step-db must be finite and > 0, got {step_db}")));
        }
        Ok(Self { min_db, max_db, step_db })
    }

    pub fn db_values(&self) -> Vec<f64> {
        db_grid(self.min_db, self.max_db, self.step_db)
    }

    pub fn thresholds(&self) -> Vec<f64> {
        self.db_values().into_iter().map(db_to_linear).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunSpec {
    pub command: Command,
    /// Preset name or scenario file path.
    pub scenario: String,
    pub grid: DbGrid,
    pub k: Option<usize>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub out: PathBuf,
    pub quadrature: QuadratureConfig,
}

impl RunSpec {
    fn k(&self) -> usize {
        self.k.unwrap_or(1)
    }

    fn scenario(&self) -> Result<ScenarioConfig> {
        let mut cfg = load_scenario(&self.scenario)?;
        if let Some(trials) = self.trials {
            cfg.trials = trials;
        }
        if let Some(seed) = self.seed {
            cfg.seed = seed;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn check(&self) -> Result<()> {
        self.quadrature.validate()?;
        if self.k == Some(0) && self.command != Command::Pmf {
            return Err(Error::Config("--k must be at least 1 for coverage curves".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Written { rows: usize },
    Validated(ValidationReport),
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Written { .. } => EXIT_PASS,
            Outcome::Validated(r) if r.passed() => EXIT_PASS,
            Outcome::Validated(_) => EXIT_FAIL,
        }
    }
}

pub fn exit_code(result: &Result<Outcome>) -> i32 {
    match result {
        Ok(outcome) => outcome.exit_code(),
        Err(_) => EXIT_ERROR,
    }
}

/// Builds the global worker pool, capped by `MULTICOV_THREADS` when set.
/// Returns the cap that was applied.
pub fn configure_threads() -> Result<Option<usize>> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(None);
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Config(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Error::Config(format!("cannot build worker pool: {e}")))?;
    Ok(Some(threads))
}

fn one_minus(kind: CurveKind) -> String {
    format!("one_minus({kind})")
}

fn analytic_rows(spec: &RunSpec, kind: CurveKind, complement: bool, cfg: &ScenarioConfig) -> Vec<CsvRow> {
    let db = spec.grid.db_values();
    let thresholds: Vec<f64> = db.iter().copied().map(db_to_linear).collect();
    let label = if complement { one_minus(kind) } else { kind.to_string() };
    evaluate_points(kind, &thresholds, &cfg.model, &spec.quadrature)
        .into_iter()
        .zip(db.iter().zip(&thresholds))
        .map(|(value, (&t_db, &t_linear))| {
            let (value, error) = match value {
                Ok(v) => (Some(if complement { 1.0 - v } else { v }), None),
                Err(e) => {
                    log::warn!("{label} at {t_db} dB failed: {e}");
                    (None, Some(e.to_string()))
                }
            };
            CsvRow {
                t_db,
                t_linear,
                value,
                kind: label.clone(),
                source: Source::Analytic,
                error,
            }
        })
        .collect()
}

fn simulation_rows(spec: &RunSpec, cfg: &ScenarioConfig) -> Result<Vec<CsvRow>> {
    let db = spec.grid.db_values();
    let thresholds: Vec<f64> = db.iter().copied().map(db_to_linear).collect();
    let out = simulate(cfg, &thresholds)?;
    let k = spec.k();
    let mut curves: Vec<(String, Vec<Estimate>)> = vec![(one_minus(CurveKind::KCoverage(k)), out.k_coverage(k))];
    if let Some(fading) = out.fading_coverage() {
        curves.push((one_minus(CurveKind::Fading), fading));
    }
    let mut rows = Vec::new();
    for (i, (&t_db, &t_linear)) in db.iter().zip(&thresholds).enumerate() {
        for (label, estimates) in &curves {
            let e = estimates[i].complement();
            for (value, source) in [(e.mean, Source::Simulation), (e.std_error, Source::SimulationStdError)] {
                rows.push(CsvRow {
                    t_db,
                    t_linear,
                    value: Some(value),
                    kind: label.clone(),
                    source,
                    error: None,
                });
            }
        }
    }
    Ok(rows)
}

fn mode_description(mode: &SimulationMode) -> String {
    match mode {
        SimulationMode::Planar { window_radius } => format!("planar, window radius {window_radius:.6e} km"),
        SimulationMode::Projected { y_max } => format!("projected, loss cutoff {y_max:.6e}"),
    }
}

/// Analytic and simulated curves of `cfg` over `thresholds`: the k-coverage
/// probability, plus the fading coverage probability when the scenario has
/// fading enabled. A failed analytic point enters as NaN and fails.
pub fn validate_scenario(
    cfg: &ScenarioConfig,
    thresholds: &[f64],
    k: usize,
    quadrature: &QuadratureConfig,
) -> Result<ValidationReport> {
    let sim = simulate(cfg, thresholds)?;
    let mut report = ValidationReport::default();
    let mut curves = vec![(CurveKind::KCoverage(k), sim.k_coverage(k))];
    if let Some(fading) = sim.fading_coverage() {
        curves.push((CurveKind::Fading, fading));
    }
    for (kind, estimates) in curves {
        let analytic: Vec<f64> = evaluate_points(kind, thresholds, &cfg.model, quadrature)
            .into_iter()
            .map(|r| {
                r.unwrap_or_else(|e| {
                    log::warn!("{kind}: analytic evaluation failed: {e}");
                    f64::NAN
                })
            })
            .collect();
        report.push_curve(&kind.to_string(), thresholds, &analytic, &estimates);
    }
    Ok(report)
}

fn report_header(cfg: &ScenarioConfig) -> Vec<(String, String)> {
    let m = &cfg.model;
    vec![
        ("scenario".into(), cfg.name.clone()),
        (
            "model".into(),
            format!(
                "lambda={} K={} beta={} W={:e} s_moment={}",
                m.density, m.path_loss_k, m.beta, m.noise, m.shadow_moment
            ),
        ),
        ("shadowing".into(), format!("{:?}", cfg.shadowing)),
        ("mode".into(), mode_description(&cfg.mode)),
        ("trials".into(), cfg.trials.to_string()),
        ("seed".into(), cfg.seed.to_string()),
        (
            "truncation".into(),
            format!(
                "neglected mean power {:.3e} of a^(beta/2) (bound {MAX_TRUNCATION_BIAS:e}; trial count and bound are this tool's defaults)",
                cfg.truncation_bias()
            ),
        ),
        ("z".into(), "(analytic - simulated) / std_error".into()),
    ]
}

/// Executes one command and writes its output file.
pub fn run(spec: &RunSpec) -> Result<Outcome> {
    spec.check()?;
    let cfg = spec.scenario()?;
    match spec.command {
        Command::Curve | Command::Pmf | Command::Fading => {
            let (kind, complement) = match spec.command {
                Command::Curve => (CurveKind::KCoverage(spec.k()), true),
                Command::Pmf => (CurveKind::Pmf(spec.k()), false),
                _ => (CurveKind::Fading, true),
            };
            let rows = analytic_rows(spec, kind, complement, &cfg);
            std::fs::write(&spec.out, csv::render(&rows))?;
            Ok(Outcome::Written { rows: rows.len() })
        }
        Command::Simulate => {
            let rows = simulation_rows(spec, &cfg)?;
            std::fs::write(&spec.out, csv::render(&rows))?;
            Ok(Outcome::Written { rows: rows.len() })
        }
        Command::Validate => {
            let report = validate_scenario(&cfg, &spec.grid.thresholds(), spec.k(), &spec.quadrature)?;
            std::fs::write(&spec.out, report.render(&report_header(&cfg)))?;
            Ok(Outcome::Validated(report))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commands_parse() {
        for c in ["curve", "pmf", "fading", "validate", "simulate"] {
            assert_eq!(c.parse::<Command>().unwrap().to_string(), c);
        }
        assert!("plot".parse::<Command>().is_err());
    }

    #[test]
    fn grid_checks() {
        assert_eq!(DbGrid::new(0.0, 0.0, 1.0).unwrap().db_values(), vec![0.0]);
        assert_eq!(DbGrid::new(-10.0, 20.0, 1.5).unwrap().thresholds().len(), 21);
        assert!(DbGrid::new(1.0, 0.0, 1.0).is_err());
        assert!(DbGrid::new(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Ok(Outcome::Written { rows: 1 })), EXIT_PASS);
        assert_eq!(exit_code(&Ok(Outcome::Validated(ValidationReport::default()))), EXIT_FAIL);
        assert_eq!(exit_code(&Err(Error::Config("x".into()))), EXIT_ERROR);
    }
}
