// Monte-Carlo estimates next to the analytic values.

use multicov::cli::urban;
use multicov::coverage::{k_coverage_probability, SymmetricSums};
use multicov::numerics::QuadratureConfig;
use multicov::simulator::simulate;

pub fn run_example() -> multicov::Result<()> {
    let scenario = urban().with_trials(5_000).with_seed(11);
    let cfg = QuadratureConfig::default();
    let ts = [0.2, 0.5, 1.0];
    let out = simulate(&scenario, &ts)?;
    for (i, &t) in ts.iter().enumerate() {
        let e = out.counts[i].k_coverage(1);
        let exact = k_coverage_probability(1, t, &scenario.model, &cfg)?;
        println!("T = {t}: P_c {exact:.5}, simulated {:.5} +- {:.5}", e.mean, e.std_error);
    }
    let mean = out.counts[0].expected_count();
    let exact = SymmetricSums::compute(ts[0], &scenario.model, &cfg)?.expected_count();
    println!("E[N(0.2)] {exact:.5}, simulated {:.5} +- {:.5}", mean.mean, mean.std_error);
    Ok(())
}

fn main() -> multicov::Result<()> {
    run_example()
}
