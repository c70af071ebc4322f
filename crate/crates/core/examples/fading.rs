// Coverage with and without Rayleigh fading on the serving link.

use multicov::cli::{suburban, urban};
use multicov::coverage::{db_to_linear, fading_coverage_probability, k_coverage_probability};
use multicov::numerics::QuadratureConfig;

pub fn run_example() -> multicov::Result<()> {
    let cfg = QuadratureConfig::default();
    for preset in [urban(), suburban()] {
        println!("{}", preset.name);
        for t_db in [-5.0, 0.0, 5.0, 10.0] {
            let t = db_to_linear(t_db);
            let plain = k_coverage_probability(1, t, &preset.model, &cfg)?;
            let faded = fading_coverage_probability(t, &preset.model, &cfg)?;
            println!("  {t_db:>5} dB  no fading {plain:.6}  fading {faded:.6}");
        }
    }
    Ok(())
}

fn main() -> multicov::Result<()> {
    run_example()
}
