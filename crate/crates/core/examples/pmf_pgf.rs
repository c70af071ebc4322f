// Distribution of the number of covering stations at one threshold.

use multicov::cli::suburban;
use multicov::coverage::SymmetricSums;
use multicov::numerics::QuadratureConfig;

pub fn run_example() -> multicov::Result<()> {
    let t = 0.25;
    let sums = SymmetricSums::compute(t, &suburban().model, &QuadratureConfig::default())?;
    println!("T = {t}, at most {} covering stations", sums.max_order());
    for k in 0..=sums.max_order() {
        println!("P(N = {k}) = {:.6}", sums.pmf(k));
    }
    // the PGF at z = 0 is P(N = 0), its slope at 1 the mean
    println!("G(0) = {:.6}  G(0.5) = {:.6}  G(1) = {:.6}", sums.pgf(0.0), sums.pgf(0.5), sums.pgf(1.0));
    println!("E[N] = {:.6} = G'(1) = {:.6}", sums.expected_count(), sums.pgf_derivative(1.0));
    Ok(())
}

fn main() -> multicov::Result<()> {
    run_example()
}
