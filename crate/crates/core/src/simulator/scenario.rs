use serde::{Deserialize, Serialize};

use crate::coverage::NetworkModel;
use crate::error::{Error, Result};

use super::ShadowingSpec;

/// Largest accepted ratio between the mean power of all neglected stations
/// and the scale `a^{β/2}` of the strongest received power.
pub const MAX_TRUNCATION_BIAS: f64 = 1e-3;

pub const MIN_TRIALS: usize = 100;

/// How a realization is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SimulationMode {
    /// Stations in a disc of radius `window_radius` km around the user, each
    /// with its own shadowing mark.
    Planar { window_radius: f64 },
    /// Propagation losses drawn directly from the Poisson process on the
    /// half line with intensity measure `a t^{2/β}`, up to `y_max`.
    Projected { y_max: f64 },
}

impl SimulationMode {
    /// Smallest disc meeting `bias`.
    pub fn planar_for_bias(model: &NetworkModel, shadowing: &ShadowingSpec, bias: f64) -> Self {
        let beta = model.beta;
        let moment = shadowing.s_moment(beta);
        // bias = 2/(β-2) · m^{-β/2} · N^{1-β/2},  N = λπR²
        let count = (bias * (beta - 2.0) / 2.0 * moment.powf(beta / 2.0)).powf(1.0 / (1.0 - beta / 2.0));
        let window_radius = (count / (std::f64::consts::PI * model.density)).sqrt();
        SimulationMode::Planar { window_radius }
    }

    /// Smallest loss cutoff meeting `bias`.
    pub fn projected_for_bias(model: &NetworkModel, bias: f64) -> Self {
        let beta = model.beta;
        let p = 2.0 / beta;
        let a = model.propagation_constant().0;
        // bias = p/(1-p) · N^{1-β/2},  N = a y_max^{2/β}
        let count = (bias * (1.0 - p) / p).powf(1.0 / (1.0 - beta / 2.0));
        SimulationMode::Projected {
            y_max: (count / a).powf(beta / 2.0),
        }
    }

    pub fn is_planar(&self) -> bool {
        matches!(self, SimulationMode::Planar { .. })
    }
}

/// Everything one Monte-Carlo run needs.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub name: String,
    pub model: NetworkModel,
    pub shadowing: ShadowingSpec,
    /// Attach unit-mean exponential fading marks to every station.
    pub fading: bool,
    pub mode: SimulationMode,
    pub trials: usize,
    pub seed: u64,
}

impl ScenarioConfig {
    /// Projected-mode scenario with the window sized for
    /// [`MAX_TRUNCATION_BIAS`].
    pub fn projected(name: &str, model: NetworkModel, shadowing: ShadowingSpec, trials: usize, seed: u64) -> Result<Self> {
        let cfg = Self {
            name: name.to_string(),
            model,
            shadowing,
            fading: false,
            mode: SimulationMode::projected_for_bias(&model, MAX_TRUNCATION_BIAS * 0.999),
            trials,
            seed,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Planar-mode scenario with the disc sized for [`MAX_TRUNCATION_BIAS`].
    pub fn planar(name: &str, model: NetworkModel, shadowing: ShadowingSpec, trials: usize, seed: u64) -> Result<Self> {
        let cfg = Self {
            name: name.to_string(),
            model,
            shadowing,
            fading: false,
            mode: SimulationMode::planar_for_bias(&model, &shadowing, MAX_TRUNCATION_BIAS * 0.999),
            trials,
            seed,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_fading(mut self, fading: bool) -> Self {
        self.fading = fading;
        self
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Propagation constant of the simulated network. Planar mode uses the
    /// moment of the simulated shadowing rather than `model.shadow_moment`.
    pub fn simulated_propagation_constant(&self) -> f64 {
        match self.mode {
            SimulationMode::Planar { .. } => {
                let m = self.model;
                std::f64::consts::PI * m.density * self.shadowing.s_moment(m.beta) / (m.path_loss_k * m.path_loss_k)
            }
            SimulationMode::Projected { .. } => self.model.propagation_constant().0,
        }
    }

    /// Expected number of stations per realization.
    pub fn expected_station_count(&self) -> f64 {
        match self.mode {
            SimulationMode::Planar { window_radius } => {
                std::f64::consts::PI * self.model.density * window_radius * window_radius
            }
            SimulationMode::Projected { y_max } => {
                self.model.propagation_constant().0 * y_max.powf(2.0 / self.model.beta)
            }
        }
    }

    /// Mean power of all stations outside the window, relative to
    /// `a^{β/2}`.
    pub fn truncation_bias(&self) -> f64 {
        let beta = self.model.beta;
        let count = self.expected_station_count();
        match self.mode {
            SimulationMode::Planar { .. } => {
                let moment = self.shadowing.s_moment(beta);
                2.0 / (beta - 2.0) * moment.powf(-beta / 2.0) * count.powf(1.0 - beta / 2.0)
            }
            SimulationMode::Projected { .. } => {
                let p = 2.0 / beta;
                p / (1.0 - p) * count.powf(1.0 - beta / 2.0)
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.model.validate()?;
        self.shadowing.validate()?;
        if self.trials < MIN_TRIALS {
            return Err(Error::Config(format!(
                "trials must be at least {MIN_TRIALS}, got {}",
                self.trials
            )));
        }
        let extent = match self.mode {
            SimulationMode::Planar { window_radius } => window_radius,
            SimulationMode::Projected { y_max } => y_max,
        };
        if !(extent > 0.0) || !extent.is_finite() {
            return Err(Error::Config(format!("simulation window must be finite and > 0, got {extent}")));
        }
        let bias = self.truncation_bias();
        if !(bias < MAX_TRUNCATION_BIAS) {
            return Err(Error::Config(format!(
                "simulation window too small: neglected interference ratio {bias:.3e} exceeds {MAX_TRUNCATION_BIAS:e}"
            )));
        }
        Ok(())
    }
}
