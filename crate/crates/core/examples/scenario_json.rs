// Reading and writing scenario files.

use multicov::cli::{parse_scenario, serialize_scenario, urban};

const CUSTOM: &str = r#"{
    "name": "dense-planar",
    "model": {"lambda": 10.0, "K": 6910, "beta": 4.0, "W": 1e-16, "s_moment": 1.0},
    "mode": {"kind": "planar"},
    "trials": 20000,
    "seed": 7
}"#;

pub fn run_example() -> multicov::Result<()> {
    let text = serialize_scenario(&urban())?;
    println!("{text}");
    assert_eq!(parse_scenario(&text)?, urban());

    let custom = parse_scenario(CUSTOM)?;
    println!(
        "{}: a = {:.4}, about {:.0} stations per planar realization",
        custom.name,
        custom.model.propagation_constant().0,
        custom.expected_station_count()
    );
    Ok(())
}

fn main() -> multicov::Result<()> {
    run_example()
}
