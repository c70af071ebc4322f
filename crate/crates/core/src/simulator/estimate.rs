use rayon::prelude::*;

use crate::coverage::max_coverage_order;
use crate::error::{domain, Result};

use super::sampling::{coverage_counts, fading_coverage_indicators, sample_unsorted};
use super::ScenarioConfig;

const CHUNK_TRIALS: usize = 512;

/// Monte-Carlo mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    /// Sample standard deviation over `√trials`.
    pub std_error: f64,
    pub trials: usize,
}

impl Estimate {
    /// From the running sums `Σx` and `Σx²` of `trials` observations.
    pub fn from_sums(sum: f64, sum_sq: f64, trials: usize) -> Self {
        let n = trials as f64;
        let mean = sum / n;
        let variance = if trials > 1 {
            ((sum_sq - n * mean * mean) / (n - 1.0)).max(0.0)
        } else {
            0.0
        };
        Self {
            mean,
            std_error: (variance / n).sqrt(),
            trials,
        }
    }

    /// `(value - mean) / std_error`; infinite when the estimate has no spread
    /// but misses `value`, and 0 when it hits it exactly.
    pub fn z_score(&self, value: f64) -> f64 {
        let diff = value - self.mean;
        if self.std_error > 0.0 {
            diff / self.std_error
        } else if diff == 0.0 {
            0.0
        } else {
            diff.signum() * f64::INFINITY
        }
    }

    /// `1 - mean`, same standard error.
    pub fn complement(&self) -> Self {
        Self {
            mean: 1.0 - self.mean,
            ..*self
        }
    }
}

/// Histogram of `N(T)` at one threshold: `counts[j]` trials saw exactly `j`
/// covering stations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CountHistogram {
    counts: Vec<u64>,
}

impl CountHistogram {
    fn record(&mut self, n: usize) {
        if n >= self.counts.len() {
            self.counts.resize(n + 1, 0);
        }
        self.counts[n] += 1;
    }

    fn merge(&mut self, other: &CountHistogram) {
        if other.counts.len() > self.counts.len() {
            self.counts.resize(other.counts.len(), 0);
        }
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    pub fn trials(&self) -> usize {
        self.counts.iter().sum::<u64>() as usize
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Largest count observed in any trial.
    pub fn max_count(&self) -> usize {
        self.counts.iter().rposition(|&c| c > 0).unwrap_or(0)
    }

    /// Estimate of `E[f(N)]`.
    pub fn mean_of<F: Fn(usize) -> f64>(&self, f: F) -> Estimate {
        let (sum, sum_sq) = self.counts.iter().enumerate().fold((0.0, 0.0), |(s, q), (j, &c)| {
            let v = f(j);
            let c = c as f64;
            (s + c * v, q + c * v * v)
        });
        Estimate::from_sums(sum, sum_sq, self.trials())
    }

    /// `P{N ≥ k}`.
    pub fn k_coverage(&self, k: usize) -> Estimate {
        self.mean_of(|j| if j >= k { 1.0 } else { 0.0 })
    }

    /// `P{N = k}`.
    pub fn pmf(&self, k: usize) -> Estimate {
        self.mean_of(|j| if j == k { 1.0 } else { 0.0 })
    }

    /// `E[C(N, n)]`, the number of unordered `n`-sets of covering stations.
    pub fn symmetric_sum(&self, n: usize) -> Estimate {
        self.mean_of(|j| binomial(j, n))
    }

    pub fn expected_count(&self) -> Estimate {
        self.symmetric_sum(1)
    }

    /// `E[z^N]`.
    pub fn pgf(&self, z: f64) -> Estimate {
        self.mean_of(|j| z.powi(j as i32))
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Everything one pass over the trials produces.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationOutput {
    pub thresholds: Vec<f64>,
    /// Fading-free coverage counts per threshold.
    pub counts: Vec<CountHistogram>,
    /// Fading coverage indicators per threshold, when the scenario has
    /// fading enabled.
    pub fading: Option<Vec<CountHistogram>>,
    pub trials: usize,
}

impl SimulationOutput {
    fn empty(thresholds: &[f64], fading: bool) -> Self {
        Self {
            thresholds: thresholds.to_vec(),
            counts: vec![CountHistogram::default(); thresholds.len()],
            fading: fading.then(|| vec![CountHistogram::default(); thresholds.len()]),
            trials: 0,
        }
    }

    fn merge(mut self, other: SimulationOutput) -> Self {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            a.merge(b);
        }
        if let (Some(a), Some(b)) = (self.fading.as_mut(), other.fading.as_ref()) {
            for (a, b) in a.iter_mut().zip(b) {
                a.merge(b);
            }
        }
        self.trials += other.trials;
        self
    }

    pub fn k_coverage(&self, k: usize) -> Vec<Estimate> {
        self.counts.iter().map(|h| h.k_coverage(k)).collect()
    }

    /// Fading coverage estimates, or `None` without fading marks.
    pub fn fading_coverage(&self) -> Option<Vec<Estimate>> {
        self.fading
            .as_ref()
            .map(|hs| hs.iter().map(|h| h.k_coverage(1)).collect())
    }
}

fn check_thresholds(thresholds: &[f64]) -> Result<()> {
    for &t in thresholds {
        if !(t > 0.0) || !t.is_finite() {
            return Err(domain("T", t, "SINR threshold must be finite and > 0"));
        }
    }
    Ok(())
}

/// Runs `cfg.trials` independent trials and tallies `N(T)` for every
/// threshold, plus the fading coverage indicator when `cfg.fading` is set.
///
/// Trial `i` uses the stream `(cfg.seed, i)` and the tallies are integer
/// counts, so the output does not depend on the number of worker threads.
pub fn simulate(cfg: &ScenarioConfig, thresholds: &[f64]) -> Result<SimulationOutput> {
    cfg.validate()?;
    check_thresholds(thresholds)?;
    let noise = cfg.model.noise;
    let chunks = cfg.trials.div_ceil(CHUNK_TRIALS);
    let partials: Vec<SimulationOutput> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let start = chunk * CHUNK_TRIALS;
            let end = (start + CHUNK_TRIALS).min(cfg.trials);
            let mut out = SimulationOutput::empty(thresholds, cfg.fading);
            let mut scratch = vec![0usize; thresholds.len()];
            let mut candidates = Vec::new();
            for trial in start..end {
                let r = sample_unsorted(cfg, trial as u64);
                coverage_counts(&r, thresholds, noise, &mut candidates, &mut scratch);
                for (h, &n) in out.counts.iter_mut().zip(&scratch) {
                    h.record(n);
                }
                if let Some(fading) = out.fading.as_mut() {
                    fading_coverage_indicators(&r, thresholds, noise, &mut scratch);
                    for (h, &n) in fading.iter_mut().zip(&scratch) {
                        h.record(n);
                    }
                }
            }
            out.trials = end - start;
            out
        })
        .collect();
    Ok(partials
        .into_iter()
        .fold(SimulationOutput::empty(thresholds, cfg.fading), SimulationOutput::merge))
}

fn single(cfg: &ScenarioConfig, t: f64) -> Result<CountHistogram> {
    let mut out = simulate(&cfg.clone().with_fading(false), &[t])?;
    Ok(out.counts.pop().expect("one threshold"))
}

/// `P{N(T) ≥ k}`.
pub fn estimate_k_coverage(cfg: &ScenarioConfig, t: f64, k: usize) -> Result<Estimate> {
    Ok(single(cfg, t)?.k_coverage(k))
}

/// `P{N(T) = j}` for `j = 0 ..= max(observed, ⌈1/T⌉)`.
pub fn estimate_pmf(cfg: &ScenarioConfig, t: f64) -> Result<Vec<Estimate>> {
    let h = single(cfg, t)?;
    let top = h.max_count().max(max_coverage_order(t));
    Ok((0..=top).map(|j| h.pmf(j)).collect())
}

/// Probability that the strongest fading-free station passes the SINR test
/// once fading marks are applied.
pub fn estimate_fading_coverage(cfg: &ScenarioConfig, t: f64) -> Result<Estimate> {
    let out = simulate(&cfg.clone().with_fading(true), &[t])?;
    Ok(out.fading_coverage().expect("fading enabled")[0])
}

/// `E[C(N(T), n)]`.
pub fn estimate_symmetric_sum(cfg: &ScenarioConfig, t: f64, n: usize) -> Result<Estimate> {
    Ok(single(cfg, t)?.symmetric_sum(n))
}

pub fn estimate_expected_count(cfg: &ScenarioConfig, t: f64) -> Result<Estimate> {
    Ok(single(cfg, t)?.expected_count())
}
