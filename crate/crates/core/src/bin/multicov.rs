use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use multicov::cli::{self, Command, DbGrid, RunSpec};
use multicov::numerics::QuadratureConfig;

#[derive(Debug, Parser)]
#[command(name = "multicov", version, about = "SINR multi-coverage curves for Poisson cellular networks")]
struct Args {
    /// curve, pmf, fading, validate or simulate
    command: String,
    /// Scenario JSON file, or one of the presets `urban`, `suburban`.
    #[arg(long)]
    scenario: String,
    /// Smallest threshold, dB.
    #[arg(long = "tmin-db", allow_negative_numbers = true)]
    tmin_db: f64,
    /// Largest threshold, dB; included when on the grid.
    #[arg(long = "tmax-db", allow_negative_numbers = true)]
    tmax_db: f64,
    /// Grid spacing, dB.
    #[arg(long = "step-db")]
    step_db: f64,
    /// Coverage order: at least k stations for curve, simulate and
    /// validate, exactly k for pmf. Defaults to 1.
    #[arg(long)]
    k: Option<usize>,
    /// Overrides the scenario's trial count.
    #[arg(long)]
    trials: Option<usize>,
    /// Overrides the scenario's seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Output CSV, or the report file for validate.
    #[arg(long)]
    out: PathBuf,
}

fn spec(args: Args) -> multicov::Result<RunSpec> {
    Ok(RunSpec {
        command: args.command.parse::<Command>()?,
        scenario: args.scenario,
        grid: DbGrid::new(args.tmin_db, args.tmax_db, args.step_db)?,
        k: args.k,
        trials: args.trials,
        seed: args.seed,
        out: args.out,
        quadrature: QuadratureConfig::default(),
    })
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) if !e.use_stderr() => {
            // --help / --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(cli::EXIT_ERROR as u8);
        }
    };
    let result = cli::configure_threads().and_then(|_| spec(args)).and_then(|s| cli::run(&s));
    match &result {
        Ok(cli::Outcome::Validated(report)) => println!("{}", report.summary_line()),
        Ok(cli::Outcome::Written { rows }) => log::info!("wrote {rows} rows"),
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(cli::exit_code(&result) as u8)
}
