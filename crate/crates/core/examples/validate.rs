// Pointwise z-scores of a short simulation against the analytic curves.

use multicov::cli::{suburban, validate_scenario};
use multicov::coverage::{db_grid, db_to_linear};
use multicov::numerics::QuadratureConfig;

pub fn run_example() -> multicov::Result<()> {
    let scenario = suburban().with_trials(4_000);
    let ts: Vec<f64> = db_grid(-10.0, 20.0, 5.0).into_iter().map(db_to_linear).collect();
    let report = validate_scenario(&scenario, &ts, 1, &QuadratureConfig::default())?;
    for p in &report.points {
        println!("{:<18} T={:<10.4} z={:+.2}", p.kind, p.threshold, p.z);
    }
    println!("{}", report.summary_line());
    Ok(())
}

fn main() -> multicov::Result<()> {
    run_example()
}
