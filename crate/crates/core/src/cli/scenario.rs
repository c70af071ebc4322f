//! JSON scenario files.
//!
//! ```json
//! {
//!   "name": "urban",
//!   "model": { "lambda": 4.619, "K": 6910, "beta": 3.8, "W": 1.5136e-16, "s_moment": 0.516 },
//!   "shadowing": { "kind": "lognormal", "sigma_db": 10 },
//!   "fading": true,
//!   "mode": { "kind": "projected" },
//!   "trials": 100000,
//!   "seed": 1
//! }
//! ```
//!
//! Only `model` is required. `shadowing` defaults to deterministic, `mode`
//! to projected, `fading` to false, `trials` to 100000 and `seed` to 1. A
//! mode without `y_max` / `window_radius` gets the smallest window meeting
//! the truncation bound.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::coverage::NetworkModel;
use crate::error::{Error, Result};
use crate::simulator::{ScenarioConfig, ShadowingSpec, SimulationMode, MAX_TRUNCATION_BIAS};

pub const DEFAULT_TRIALS: usize = 100_000;
pub const DEFAULT_SEED: u64 = 1;

/// Normalized noise power `10^{-15.82}` shared by both presets.
pub const PRESET_NOISE_DB: f64 = -158.2;
/// Lognormal spread of the presets.
pub const PRESET_SIGMA_DB: f64 = 10.0;
/// `E[S^{2/β}]` for 10 dB lognormal shadowing and `β = 3.8`, as quoted with
/// the presets.
pub const PRESET_S_MOMENT: f64 = 0.516;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum ModeEntry {
    Projected {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        y_max: Option<f64>,
    },
    Planar {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        window_radius: Option<f64>,
    },
}

impl Default for ModeEntry {
    fn default() -> Self {
        ModeEntry::Projected { y_max: None }
    }
}

fn default_name() -> String {
    "scenario".to_string()
}

fn default_shadowing() -> ShadowingSpec {
    ShadowingSpec::Deterministic
}

fn default_trials() -> usize {
    DEFAULT_TRIALS
}

fn default_seed() -> u64 {
    DEFAULT_SEED
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    #[serde(default = "default_name")]
    name: String,
    model: NetworkModel,
    #[serde(default = "default_shadowing")]
    shadowing: ShadowingSpec,
    #[serde(default)]
    fading: bool,
    #[serde(default)]
    mode: ModeEntry,
    #[serde(default = "default_trials")]
    trials: usize,
    #[serde(default = "default_seed")]
    seed: u64,
}

fn into_config(file: ScenarioFile) -> Result<ScenarioConfig> {
    file.model.validate()?;
    file.shadowing.validate()?;
    let bias = MAX_TRUNCATION_BIAS * 0.999;
    let mode = match file.mode {
        ModeEntry::Projected { y_max: Some(y_max) } => SimulationMode::Projected { y_max },
        ModeEntry::Projected { y_max: None } => SimulationMode::projected_for_bias(&file.model, bias),
        ModeEntry::Planar {
            window_radius: Some(window_radius),
        } => SimulationMode::Planar { window_radius },
        ModeEntry::Planar { window_radius: None } => {
            SimulationMode::planar_for_bias(&file.model, &file.shadowing, bias)
        }
    };
    let cfg = ScenarioConfig {
        name: file.name,
        model: file.model,
        shadowing: file.shadowing,
        fading: file.fading,
        mode,
        trials: file.trials,
        seed: file.seed,
    };
    cfg.validate()?;
    Ok(cfg)
}

/// Parses and validates a JSON scenario.
pub fn parse_scenario(text: &str) -> Result<ScenarioConfig> {
    let file: ScenarioFile = serde_json::from_str(text)?;
    into_config(file)
}

/// JSON text that [`parse_scenario`] maps back to `cfg`. The simulation
/// window is always written out explicitly.
pub fn serialize_scenario(cfg: &ScenarioConfig) -> Result<String> {
    let mode = match cfg.mode {
        SimulationMode::Projected { y_max } => ModeEntry::Projected { y_max: Some(y_max) },
        SimulationMode::Planar { window_radius } => ModeEntry::Planar {
            window_radius: Some(window_radius),
        },
    };
    let file = ScenarioFile {
        name: cfg.name.clone(),
        model: cfg.model,
        shadowing: cfg.shadowing,
        fading: cfg.fading,
        mode,
        trials: cfg.trials,
        seed: cfg.seed,
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

fn preset(name: &str, density: f64) -> ScenarioConfig {
    let model = NetworkModel::new(density, 6910.0, 3.8, 10f64.powf(PRESET_NOISE_DB / 10.0), PRESET_S_MOMENT)
        .expect("preset parameters are valid");
    let shadowing = ShadowingSpec::Lognormal {
        sigma_db: PRESET_SIGMA_DB,
    };
    ScenarioConfig::projected(name, model, shadowing, DEFAULT_TRIALS, DEFAULT_SEED)
        .expect("preset scenario is valid")
        .with_fading(true)
}

/// Dense deployment, `λ = 4.619 km⁻²`, `K = 6910 km⁻¹`, `β = 3.8`.
pub fn urban() -> ScenarioConfig {
    preset("urban", 4.619)
}

/// Same propagation as [`urban`] with `λ = 0.144 km⁻²`.
pub fn suburban() -> ScenarioConfig {
    preset("suburban", 0.144)
}

pub fn preset_by_name(name: &str) -> Option<ScenarioConfig> {
    match name {
        "urban" => Some(urban()),
        "suburban" => Some(suburban()),
        _ => None,
    }
}

/// A preset name (`urban`, `suburban`) or the path of a JSON scenario file.
pub fn load_scenario(arg: &str) -> Result<ScenarioConfig> {
    if let Some(cfg) = preset_by_name(arg) {
        if !Path::new(arg).exists() {
            return Ok(cfg);
        }
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| Error::Config(format!("cannot read scenario file {arg}: {e}")))?;
    parse_scenario(&text).map_err(|e| match e {
        Error::Json(e) => Error::Config(format!("{arg}: {e}")),
        other => other,
    })
}
