use multicov::coverage::*;
use multicov::numerics::QuadratureConfig;
use multicov::simulator::*;

fn preset_model(density: f64) -> NetworkModel {
    NetworkModel::new(density, 6910.0, 3.8, 10f64.powf(-15.82), 0.516).unwrap()
}

fn projected(density: f64, trials: usize, seed: u64) -> ScenarioConfig {
    ScenarioConfig::projected("t", preset_model(density), ShadowingSpec::Deterministic, trials, seed).unwrap()
}

fn within_3_sigma(e: Estimate, analytic: f64) {
    assert!(e.z_score(analytic).abs() <= 3.0, "estimate {e:?} vs analytic {analytic}");
}

/// Two-sample Kolmogorov-Smirnov statistic.
fn ks_two_sample(mut a: Vec<f64>, mut b: Vec<f64>) -> f64 {
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (mut i, mut j, mut d) = (0, 0, 0.0f64);
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / a.len() as f64 - j as f64 / b.len() as f64).abs());
    }
    d
}

#[test]
fn urban_estimates_match_analytic_values() {
    let qc = QuadratureConfig::default();
    let m = preset_model(4.619);
    let cfg = projected(4.619, 100_000, 2024).with_fading(true);
    let ts = [0.1, 0.3, 1.0];
    let out = simulate(&cfg, &ts).unwrap();

    within_3_sigma(out.counts[0].k_coverage(1), k_coverage_probability(1, 0.1, &m, &qc).unwrap());
    let sums = SymmetricSums::compute(0.3, &m, &qc).unwrap();
    within_3_sigma(out.counts[1].symmetric_sum(2), sums.get(2));
    within_3_sigma(out.counts[1].pmf(2), sums.pmf(2));
    within_3_sigma(out.counts[1].k_coverage(2), sums.k_coverage(2));
    within_3_sigma(out.counts[1].pgf(0.5), sums.pgf(0.5));
    within_3_sigma(out.counts[2].k_coverage(1), k_coverage_probability(1, 1.0, &m, &qc).unwrap());
    within_3_sigma(out.fading_coverage().unwrap()[2], fading_coverage_probability(1.0, &m, &qc).unwrap());

    let two = out.counts[2].k_coverage(2);
    assert_eq!((two.mean, two.std_error), (0.0, 0.0));
    assert!(out.counts[2].max_count() <= 1);
}

#[test]
fn suburban_mean_count() {
    let qc = QuadratureConfig::default();
    let m = preset_model(0.144);
    let e = estimate_expected_count(&projected(0.144, 100_000, 77), 0.2).unwrap();
    within_3_sigma(e, expected_coverage(0.2, &m, &qc).unwrap());
}

#[test]
fn planar_point_count_is_poisson_mean() {
    let cfg = ScenarioConfig::planar("t", preset_model(4.619), ShadowingSpec::Deterministic, 10_000, 5).unwrap();
    let n = 10_000;
    let counts: Vec<f64> = (0..n).map(|i| sample_planar(&cfg, i).len() as f64).collect();
    let mean = counts.iter().sum::<f64>() / n as f64;
    let expected = cfg.expected_station_count();
    assert!((mean - expected).abs() <= 3.0 * (expected / n as f64).sqrt(), "{mean} vs {expected}");
}

#[test]
fn nearest_loss_has_weibull_law() {
    // P{Y₁ > s} = exp(-a s^{2/β})
    let cfg = projected(4.619, 10_000, 9);
    let a = cfg.model.propagation_constant().0;
    let n = 10_000u64;
    let mut y1: Vec<f64> = (0..n).map(|i| sample_projected(&cfg, i).losses[0]).collect();
    y1.sort_by(f64::total_cmp);
    let d = y1
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let cdf = 1.0 - (-a * s.powf(2.0 / cfg.model.beta)).exp();
            (cdf - i as f64 / n as f64).abs().max((cdf - (i + 1) as f64 / n as f64).abs())
        })
        .fold(0.0, f64::max);
    // 1% critical value
    assert!(d < 1.63 / (n as f64).sqrt(), "KS distance {d}");
}

#[test]
fn planar_and_projected_losses_agree() {
    let lognormal = ShadowingSpec::Lognormal { sigma_db: 10.0 };
    let model = NetworkModel {
        shadow_moment: lognormal.s_moment(3.8),
        ..preset_model(4.619)
    };
    let planar = ScenarioConfig::planar("p", model, lognormal, 5_000, 31).unwrap();
    let proj = ScenarioConfig::projected("q", model, lognormal, 5_000, 32).unwrap();
    let n = 5_000u64;
    let critical = 1.63 * (2.0 / n as f64).sqrt();
    for rank in [0, 2] {
        let a: Vec<f64> = (0..n).map(|i| sample_planar(&planar, i).losses[rank]).collect();
        let b: Vec<f64> = (0..n).map(|i| sample_projected(&proj, i).losses[rank]).collect();
        let d = ks_two_sample(a, b);
        assert!(d < critical, "rank {rank}: KS distance {d}");
    }
}

#[test]
fn realizations_are_reproducible() {
    let cfg = ScenarioConfig::planar("p", preset_model(0.144), ShadowingSpec::Exponential, 100, 3)
        .unwrap()
        .with_fading(true);
    assert_eq!(sample(&cfg, 12), sample(&cfg, 12));
    let r = sample(&cfg, 13);
    assert!(r.losses.iter().all(|&l| l > 0.0));
    assert!(r.losses.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(r.fading_marks.unwrap().len(), r.losses.len());
}

#[test]
fn more_trials_shrink_the_error() {
    let small = estimate_k_coverage(&projected(4.619, 1_000, 1), 0.5, 1).unwrap();
    let large = estimate_k_coverage(&projected(4.619, 16_000, 1), 0.5, 1).unwrap();
    let ratio = small.std_error / large.std_error;
    assert!((3.0..5.5).contains(&ratio), "{ratio}");
}
