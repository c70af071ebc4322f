//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use multicov::cli::{suburban, urban};
use multicov::coverage::*;
use multicov::numerics::*;
use multicov::simulator::*;
use multicov::validation::{ValidationReport, PASS_FRACTION, Z_LIMIT};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

fn qc() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn figure_grid() -> Vec<f64> {
    db_grid(-10.0, 20.0, 1.5).into_iter().map(db_to_linear).collect()
}

/// Preset runs shared by several criteria.
struct PresetRun {
    cfg: ScenarioConfig,
    sim: SimulationOutput,
}

fn preset_runs() -> Vec<PresetRun> {
    [urban(), suburban()]
        .into_iter()
        .map(|cfg| {
            let sim = simulate(&cfg, &figure_grid()).expect("preset simulation");
            PresetRun { cfg, sim }
        })
        .collect()
}

fn figure_one(runs: &[PresetRun]) -> Outcome {
    let ts = figure_grid();
    let mut ok = true;
    let mut parts = Vec::new();
    for run in runs {
        let m = &run.cfg.model;
        for (kind, estimates) in [
            (CurveKind::KCoverage(1), run.sim.k_coverage(1)),
            (CurveKind::Fading, run.sim.fading_coverage().expect("presets simulate fading")),
        ] {
            let curve = CoverageCurve::evaluate(kind, &ts, m, &qc()).expect("analytic curve");
            // 1 - P against 1 - P̂: the same z up to sign
            let analytic: Vec<f64> = curve.complement();
            let simulated: Vec<Estimate> = estimates.iter().map(Estimate::complement).collect();
            let mut report = ValidationReport::default();
            report.push_curve(&kind.to_string(), &ts, &analytic, &simulated);
            ok &= report.passed();
            parts.push(format!(
                "{} 1-{kind}: {}/{} within {Z_LIMIT} se (max |z| {:.2})",
                run.cfg.name,
                report.agreeing(),
                report.points.len(),
                report.max_abs_z()
            ));
        }
    }
    parts.push(format!("{} trials each, need {:.0}%", runs[0].cfg.trials, PASS_FRACTION * 100.0));
    outcome(ok, parts.join("; "))
}

fn sinr_versus_sir() -> Outcome {
    let ts = figure_grid();
    let gap = |cfg: ScenarioConfig| {
        let sinr = CoverageCurve::evaluate(CurveKind::KCoverage(1), &ts, &cfg.model, &qc()).unwrap();
        let sir = CoverageCurve::evaluate(CurveKind::KCoverage(1), &ts, &cfg.model.without_noise(), &qc()).unwrap();
        sinr.values
            .iter()
            .zip(&sir.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    };
    let (u, s) = (gap(urban()), gap(suburban()));
    outcome(
        u < 0.01 && s > 0.01,
        format!("max |SINR - SIR|: urban {u:.2e} (< 0.01), suburban {s:.2e} (> 0.01)"),
    )
}

fn closed_forms() -> Outcome {
    let mut worst_i: f64 = 0.0;
    for beta in [2.5, 3.8, 5.0] {
        for n in 1..=6 {
            let quad = calc_integral_i(n, beta, 0.0, &qc()).unwrap();
            worst_i = worst_i.max((quad - integral_i_at_zero(n, beta).unwrap()).abs());
        }
    }
    let mut worst_j: f64 = 0.0;
    for x in [0.1, 1.0, 10.0] {
        let quad = integrate_unit_hypercube(|v: &[f64]| j_integrand(3.8, x, v), 1, &qc()).unwrap().value;
        worst_j = worst_j.max((quad - integral_j2_closed_form(3.8, x, &qc()).unwrap()).abs());
    }
    let sir = NetworkModel::new(4.619, 6910.0, 3.8, 0.0, 0.516).unwrap();
    let mut worst_f: f64 = 0.0;
    for t in [0.1, 1.0, 10.0] {
        let numeric = fading_coverage_integral(t, &sir, &qc()).unwrap();
        worst_f = worst_f.max((numeric - fading_coverage_closed_form(t, 3.8, &qc()).unwrap()).abs());
    }
    // 2π/(β sin(2π/β)) = Γ(1 + 2/β) Γ(1 - 2/β)
    let mut worst_c: f64 = 0.0;
    for beta in [2.2, 2.5, 3.0, 3.8, 4.0, 5.0, 7.5] {
        let p = 2.0 / beta;
        let product = gamma_fn(1.0 + p).unwrap() * gamma_fn(1.0 - p).unwrap();
        worst_c = worst_c.max((c_prime(beta).unwrap() - product).abs() / product);
    }
    outcome(
        worst_i <= 1e-10 && worst_j <= 1e-8 && worst_f <= 1e-8 && worst_c <= 1e-12,
        format!(
            "I_n(0) {worst_i:.1e} (1e-10), J_2 {worst_j:.1e} (1e-8), fading W=0 {worst_f:.1e} (1e-8), C' {worst_c:.1e} (1e-12)"
        ),
    )
}

fn inclusion_exclusion() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut checked = 0;
    for cfg in [urban(), suburban()] {
        for t in [0.11, 0.2, 0.3, 0.45, 0.6, 0.8, 0.99] {
            let s = SymmetricSums::compute(t, &cfg.model, &qc()).unwrap();
            let top = s.max_order();
            for k in 1..=top + 1 {
                let diff = s.k_coverage_raw(k) - s.k_coverage_raw(k + 1);
                worst = worst.max((s.pmf_raw(k) - diff).abs());
                checked += 1;
            }
            let total: f64 = (0..=top).map(|k| s.pmf_raw(k)).sum();
            worst = worst
                .max((total - 1.0).abs())
                .max((s.pgf(1.0) - 1.0).abs())
                .max((s.pgf(0.0) - s.pmf(0)).abs())
                .max((s.pgf_derivative(1.0) - s.expected_count()).abs());
        }
    }
    outcome(
        worst <= 1e-6,
        format!("{checked} (T, k) pairs with T < 1, both presets: max deviation {worst:.1e} (1e-6)"),
    )
}

fn truncation(runs: &[PresetRun]) -> Outcome {
    let m = urban().model;
    let mut nonzero = 0;
    let mut cases = 0;
    for n in 2..=10usize {
        let edge = 1.0 / (n - 1) as f64;
        for t in [edge, edge * 1.01, edge * 3.0, 50.0] {
            cases += 1;
            if symmetric_sum(n, t, &m, &qc()).unwrap() != 0.0 {
                nonzero += 1;
            }
        }
    }
    let mut max_count = 0;
    let mut trials = 0;
    for run in runs {
        for (&t, h) in run.sim.thresholds.iter().zip(&run.sim.counts) {
            if t >= 1.0 {
                max_count = max_count.max(h.max_count());
                trials = h.trials();
            }
        }
    }
    outcome(
        nonzero == 0 && max_count <= 1,
        format!("S_n non-zero in {nonzero}/{cases} cases past 1/(n-1); largest N(T) for T >= 1 over {trials} trials per point: {max_count}"),
    )
}

fn shadowing_invariance() -> Outcome {
    let base = urban().model;
    let lognormal = ShadowingSpec::Lognormal { sigma_db: 10.0 };
    let target = base.density * lognormal.s_moment(base.beta);
    let trials = 100_000;
    let ts = figure_grid();
    let planar = |shadowing: ShadowingSpec, seed: u64| {
        let moment = shadowing.s_moment(base.beta);
        let model = NetworkModel {
            density: target / moment,
            shadow_moment: moment,
            ..base
        };
        ScenarioConfig::planar("planar", model, shadowing, trials, seed).unwrap()
    };
    let projected = ScenarioConfig::projected(
        "projected",
        NetworkModel {
            shadow_moment: lognormal.s_moment(base.beta),
            ..base
        },
        lognormal,
        trials,
        604,
    )
    .unwrap();
    let variants = [
        ("lognormal", planar(lognormal, 601)),
        ("exponential", planar(ShadowingSpec::Exponential, 602)),
        ("deterministic", planar(ShadowingSpec::Deterministic, 603)),
        ("projected", projected),
    ];
    let curves: Vec<(&str, Vec<Estimate>)> = variants
        .iter()
        .map(|(name, cfg)| (*name, simulate(cfg, &ts).unwrap().k_coverage(1)))
        .collect();
    let mut total = 0;
    let mut agreeing = 0;
    let mut worst: f64 = 0.0;
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            for (a, b) in curves[i].1.iter().zip(&curves[j].1) {
                let se = a.std_error.hypot(b.std_error);
                let z = if se > 0.0 { (a.mean - b.mean) / se } else { 0.0 };
                total += 1;
                if z.abs() <= Z_LIMIT {
                    agreeing += 1;
                }
                worst = worst.max(z.abs());
            }
        }
    }
    let fraction = agreeing as f64 / total as f64;
    outcome(
        fraction >= PASS_FRACTION,
        format!(
            "planar lognormal/exponential/deterministic and projected, {trials} trials each: {agreeing}/{total} pairwise points within {Z_LIMIT} combined se (max |z| {worst:.2})"
        ),
    )
}

fn fading_below_plain() -> Outcome {
    let ts = figure_grid();
    let cfg = qc();
    let mut violations = 0;
    let mut smallest_margin = f64::INFINITY;
    for preset in [urban(), suburban()] {
        for &t in &ts {
            let pc = k_coverage_probability(1, t, &preset.model, &cfg).unwrap();
            let faded = fading_coverage_probability(t, &preset.model, &cfg).unwrap();
            let tol = cfg.tolerance_for(pc) + cfg.tolerance_for(faded);
            let margin = pc + 2.0 * tol - faded;
            smallest_margin = smallest_margin.min(margin);
            if margin < 0.0 {
                violations += 1;
            }
        }
    }
    outcome(
        violations == 0,
        format!("{violations} grid points with fading coverage above P_c + 2 tol (smallest margin {smallest_margin:.2e})"),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut all = true;
    let mut report = |id: u32, name: &str, o: Outcome| {
        all &= o.passed;
        println!("[{}] {id} {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
    };
    let runs = preset_runs();
    report(1, "analytic against simulated distribution functions", figure_one(&runs));
    report(2, "interference-limited urban, noise-visible suburban", sinr_versus_sir());
    report(3, "closed forms", closed_forms());
    report(4, "inclusion-exclusion identities", inclusion_exclusion());
    report(5, "order truncation", truncation(&runs));
    report(6, "shadowing invariance and simulator modes", shadowing_invariance());
    report(7, "fading never helps", fading_below_plain());
    println!("acceptance finished in {:.0?}", start.elapsed());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
