// Probability that at least k stations cover a user, urban preset.

use multicov::cli::urban;
use multicov::coverage::{db_to_linear, k_coverage_probability};
use multicov::numerics::QuadratureConfig;

pub fn run_example() -> multicov::Result<()> {
    let model = urban().model;
    let cfg = QuadratureConfig::default();
    println!("{:>6} {:>10} {:>10} {:>10}", "T_dB", "k=1", "k=2", "k=3");
    for t_db in [-10.0, -6.0, -3.0, 0.0] {
        let t = db_to_linear(t_db);
        let p: Vec<f64> = (1..=3)
            .map(|k| k_coverage_probability(k, t, &model, &cfg))
            .collect::<multicov::Result<_>>()?;
        println!("{t_db:>6} {:>10.6} {:>10.6} {:>10.6}", p[0], p[1], p[2]);
    }
    Ok(())
}

fn main() -> multicov::Result<()> {
    run_example()
}
