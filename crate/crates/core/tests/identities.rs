use multicov::coverage::*;
use multicov::numerics::QuadratureConfig;
use proptest::prelude::*;

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn check_identities(sums: &SymmetricSums, tol: f64) {
    let top = sums.max_order();
    let total: f64 = (0..=top + 1).map(|k| sums.pmf_raw(k)).sum();
    assert!((total - 1.0).abs() < tol, "pmf total {total}");
    for k in 1..=top + 1 {
        let diff = sums.k_coverage_raw(k) - sums.k_coverage_raw(k + 1);
        assert!((sums.pmf_raw(k) - diff).abs() < tol, "k={k}");
    }
    assert!((sums.pgf(1.0) - 1.0).abs() < tol);
    assert!((sums.pgf(0.0) - sums.pmf(0)).abs() < tol);
    assert!((sums.pgf_derivative(1.0) - sums.expected_count()).abs() < tol);
    for k in 0..=top {
        assert!(sums.pmf_raw(k) > -tol, "negative mass at k={k}");
    }
}

#[test]
fn identities_on_preset_grid() {
    for density in [4.619, 0.144] {
        let m = NetworkModel::new(density, 6910.0, 3.8, 10f64.powf(-15.82), 0.516).unwrap();
        for t in [0.12, 0.2, 0.3, 0.45, 0.7, 0.95] {
            check_identities(&SymmetricSums::compute(t, &m, &cfg()).unwrap(), 1e-6);
        }
    }
}

#[test]
fn k_coverage_decreases_in_k_and_t() {
    let m = NetworkModel::new(1.0, 100.0, 4.0, 0.0, 1.0).unwrap();
    let a = SymmetricSums::compute(0.2, &m, &cfg()).unwrap();
    let b = SymmetricSums::compute(0.25, &m, &cfg()).unwrap();
    for k in 1..=5 {
        assert!(a.k_coverage(k + 1) <= a.k_coverage(k));
        assert!(b.k_coverage(k) <= a.k_coverage(k) + 1e-9);
    }
}

#[test]
fn sums_vanish_past_the_order_limit() {
    let m = NetworkModel::new(4.619, 6910.0, 3.8, 1e-16, 0.516).unwrap();
    for n in 2..=8usize {
        let edge = 1.0 / (n - 1) as f64;
        for t in [edge, edge * 1.001, edge * 2.0, 5.0] {
            assert_eq!(symmetric_sum(n, t, &m, &cfg()).unwrap(), 0.0, "n={n} T={t}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn identities_for_random_networks(
        beta in 2.6f64..5.0,
        density in 0.05f64..10.0,
        noise_exp in -20.0f64..-14.0,
        t in 0.2f64..0.99,
    ) {
        let m = NetworkModel::new(density, 6910.0, beta, 10f64.powf(noise_exp), 0.7).unwrap();
        check_identities(&SymmetricSums::compute(t, &m, &cfg()).unwrap(), 1e-6);
    }

    #[test]
    fn coverage_between_fading_and_one(t_db in -10.0f64..20.0, density in 0.05f64..10.0) {
        let m = NetworkModel::new(density, 6910.0, 3.8, 10f64.powf(-15.82), 0.516).unwrap();
        let t = db_to_linear(t_db);
        let pc = k_coverage_probability(1, t, &m, &cfg()).unwrap();
        let faded = fading_coverage_probability(t, &m, &cfg()).unwrap();
        prop_assert!((0.0..=1.0).contains(&pc));
        prop_assert!(faded <= pc + 1e-8);
    }
}
