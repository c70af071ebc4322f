use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;

use crate::coverage::NetworkModel;

use super::{ScenarioConfig, SimulationMode};

// Fading marks use their own key so the losses of a trial do not depend on
// whether fading is switched on.
const FADING_KEY: u64 = 0xfad1_4e5e_ed00_0001;

/// One simulated network as seen from the typical user.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct NetworkRealization {
    /// Propagation losses `ℓ(|x|)/S_x`, ascending.
    pub losses: Vec<f64>,
    /// Unit-mean exponential fading marks aligned with `losses`.
    pub fading_marks: Option<Vec<f64>>,
}

impl NetworkRealization {
    /// Sorts the losses. Marks, if present, are i.i.d. and independent of
    /// the losses, so they are kept in draw order.
    pub fn from_losses(mut losses: Vec<f64>, fading_marks: Option<Vec<f64>>) -> Self {
        losses.sort_unstable_by(f64::total_cmp);
        Self { losses, fading_marks }
    }

    pub fn len(&self) -> usize {
        self.losses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.losses.is_empty()
    }

    /// Total received power `Σ F_i / loss_i` (`F_i = 1` without marks).
    pub fn total_power(&self, with_fading: bool) -> f64 {
        match (&self.fading_marks, with_fading) {
            (Some(marks), true) => self.losses.iter().zip(marks).map(|(l, f)| f / l).sum(),
            _ => self.losses.iter().map(|l| 1.0 / l).sum(),
        }
    }
}

/// `(K r)^β / S`.
pub fn propagation_loss(model: &NetworkModel, distance: f64, shadow: f64) -> f64 {
    (model.path_loss_k * distance).powf(model.beta) / shadow
}

/// Independent generator for one trial; the stream depends only on
/// `(seed, trial_index)`.
pub fn trial_rng(seed: u64, trial_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial_index);
    rng
}

fn fading_marks(seed: u64, trial_index: u64, count: usize) -> Vec<f64> {
    let mut rng = trial_rng(seed ^ FADING_KEY, trial_index);
    (0..count).map(|_| rng.sample::<f64, _>(Exp1)).collect()
}

/// Stations of a homogeneous Poisson process in a disc around the user.
///
/// Points are generated by distance: the values `πλr²` of successive
/// stations are the arrival times of a unit-rate Poisson process, which
/// gives Poisson(λπR²) points uniform in the disc.
pub fn sample_planar(cfg: &ScenarioConfig, trial_index: u64) -> NetworkRealization {
    let mut r = planar_unsorted(cfg, trial_index);
    r.losses.sort_unstable_by(f64::total_cmp);
    r
}

fn planar_unsorted(cfg: &ScenarioConfig, trial_index: u64) -> NetworkRealization {
    let SimulationMode::Planar { window_radius } = cfg.mode else {
        panic!("sample_planar called on a projected-mode scenario");
    };
    let model = &cfg.model;
    let area_scale = std::f64::consts::PI * model.density;
    let mass = area_scale * window_radius * window_radius;
    let mut rng = trial_rng(cfg.seed, trial_index);
    let mut losses = Vec::with_capacity((mass * 1.1) as usize + 16);
    let mut arrival = 0.0;
    loop {
        arrival += rng.sample::<f64, _>(Exp1);
        if arrival >= mass {
            break;
        }
        let r = (arrival / area_scale).sqrt();
        let shadow = cfg.shadowing.sample(&mut rng);
        losses.push(propagation_loss(model, r, shadow));
    }
    let fading_marks = cfg.fading.then(|| fading_marks(cfg.seed, trial_index, losses.len()));
    NetworkRealization { losses, fading_marks }
}

/// Propagation losses drawn directly from the Poisson process on `[0, y_max)`
/// with intensity measure `a t^{2/β}`.
///
/// Successive values `a Y^{2/β}` are unit-rate Poisson arrivals, so
/// `Y = (V/a)^{β/2}` comes out already sorted.
pub fn sample_projected(cfg: &ScenarioConfig, trial_index: u64) -> NetworkRealization {
    let SimulationMode::Projected { y_max } = cfg.mode else {
        panic!("sample_projected called on a planar-mode scenario");
    };
    let beta = cfg.model.beta;
    let a = cfg.model.propagation_constant().0;
    let mass = a * y_max.powf(2.0 / beta);
    let half_beta = beta / 2.0;
    let mut rng = trial_rng(cfg.seed, trial_index);
    let mut losses = Vec::with_capacity((mass * 1.1) as usize + 16);
    let mut arrival = 0.0;
    loop {
        arrival += rng.sample::<f64, _>(Exp1);
        if arrival >= mass {
            break;
        }
        losses.push((arrival / a).powf(half_beta));
    }
    let fading_marks = cfg.fading.then(|| fading_marks(cfg.seed, trial_index, losses.len()));
    NetworkRealization { losses, fading_marks }
}

/// Same stations as [`sample`], but the losses are only guaranteed sorted in
/// projected mode.
pub(crate) fn sample_unsorted(cfg: &ScenarioConfig, trial_index: u64) -> NetworkRealization {
    match cfg.mode {
        SimulationMode::Planar { .. } => planar_unsorted(cfg, trial_index),
        SimulationMode::Projected { .. } => sample_projected(cfg, trial_index),
    }
}

/// Dispatches on the scenario's mode.
pub fn sample(cfg: &ScenarioConfig, trial_index: u64) -> NetworkRealization {
    match cfg.mode {
        SimulationMode::Planar { .. } => sample_planar(cfg, trial_index),
        SimulationMode::Projected { .. } => sample_projected(cfg, trial_index),
    }
}

/// Number of stations offering SINR above `t`.
///
/// `SINR_i = P_i / (W + I - P_i)` where `I` sums the power of every station,
/// including station `i`. With `use_fading` only the station with the
/// smallest fading-free loss is tested, using faded powers `F_i/loss_i`
/// throughout, so the result is 0 or 1.
pub fn coverage_count(r: &NetworkRealization, t: f64, noise: f64, use_fading: bool) -> usize {
    if r.losses.is_empty() {
        return 0;
    }
    if use_fading {
        let marks = r
            .fading_marks
            .as_ref()
            .expect("fading coverage needs a realization with fading marks");
        let total = r.total_power(true);
        let serving = marks[0] / r.losses[0];
        return usize::from(serving / (noise + (total - serving)) > t);
    }
    let total = r.total_power(false);
    // powers decrease along the sorted losses and SINR is increasing in the
    // power, so the covering stations form a prefix
    r.losses
        .iter()
        .take_while(|&&loss| {
            let power = 1.0 / loss;
            power / (noise + (total - power)) > t
        })
        .count()
}

/// Coverage counts for several thresholds from a single power sum. The
/// losses need not be sorted.
///
/// A station can only reach SINR `T` if its power exceeds `I·T/(1+T)`, so
/// only stations above that floor for the smallest threshold are ranked.
pub(crate) fn coverage_counts(
    r: &NetworkRealization,
    thresholds: &[f64],
    noise: f64,
    candidates: &mut Vec<f64>,
    out: &mut [usize],
) {
    let total = r.total_power(false);
    let t_min = thresholds.iter().copied().fold(f64::INFINITY, f64::min);
    let floor = total * t_min / (1.0 + t_min);
    candidates.clear();
    candidates.extend(r.losses.iter().map(|l| 1.0 / l).filter(|&p| p > floor));
    candidates.sort_unstable_by(|a, b| b.total_cmp(a));
    for (slot, &t) in out.iter_mut().zip(thresholds) {
        *slot = candidates
            .iter()
            .take_while(|&&power| power / (noise + (total - power)) > t)
            .count();
    }
}

/// Fading coverage indicators for several thresholds. The losses need not
/// be sorted.
pub(crate) fn fading_coverage_indicators(r: &NetworkRealization, thresholds: &[f64], noise: f64, out: &mut [usize]) {
    let Some(marks) = r.fading_marks.as_ref().filter(|_| !r.is_empty()) else {
        out.fill(0);
        return;
    };
    let nearest = r
        .losses
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .expect("non-empty");
    let total = r.total_power(true);
    let serving = marks[nearest] / r.losses[nearest];
    let sinr = serving / (noise + (total - serving));
    for (slot, &t) in out.iter_mut().zip(thresholds) {
        *slot = usize::from(sinr > t);
    }
}
