// 1 - P(SINR > T) and 1 - P(SIR > T) for both presets over -10..20 dB.

use multicov::cli::{suburban, urban};
use multicov::coverage::{db_grid, db_to_linear, CoverageCurve, CurveKind};
use multicov::numerics::QuadratureConfig;

pub fn run_example() -> multicov::Result<()> {
    let cfg = QuadratureConfig::default();
    let db = db_grid(-10.0, 20.0, 3.0);
    let ts: Vec<f64> = db.iter().copied().map(db_to_linear).collect();
    let (u, s) = (urban().model, suburban().model);
    let curves = [
        CoverageCurve::evaluate(CurveKind::KCoverage(1), &ts, &u, &cfg)?,
        CoverageCurve::evaluate(CurveKind::KCoverage(1), &ts, &u.without_noise(), &cfg)?,
        CoverageCurve::evaluate(CurveKind::KCoverage(1), &ts, &s, &cfg)?,
        CoverageCurve::evaluate(CurveKind::KCoverage(1), &ts, &s.without_noise(), &cfg)?,
    ];
    let cdfs: Vec<Vec<f64>> = curves.iter().map(CoverageCurve::complement).collect();
    println!("{:>6} {:>12} {:>12} {:>12} {:>12}", "T_dB", "urban SINR", "urban SIR", "sub SINR", "sub SIR");
    for (i, t_db) in db.iter().enumerate() {
        println!(
            "{t_db:>6} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
            cdfs[0][i], cdfs[1][i], cdfs[2][i], cdfs[3][i]
        );
    }
    Ok(())
}

fn main() -> multicov::Result<()> {
    run_example()
}
