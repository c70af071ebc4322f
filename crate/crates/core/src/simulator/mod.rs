//! Monte-Carlo simulation of the typical user's coverage count.

mod estimate;
mod sampling;
mod scenario;
mod shadowing;

pub use estimate::{
    estimate_expected_count, estimate_fading_coverage, estimate_k_coverage, estimate_pmf, estimate_symmetric_sum,
    simulate, CountHistogram, Estimate, SimulationOutput,
};
pub use sampling::{
    coverage_count, propagation_loss, sample, sample_planar, sample_projected, trial_rng, NetworkRealization,
};
pub use scenario::{ScenarioConfig, SimulationMode, MAX_TRUNCATION_BIAS, MIN_TRIALS};
pub use shadowing::ShadowingSpec;
