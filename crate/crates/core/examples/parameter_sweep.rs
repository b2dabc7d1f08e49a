// A config-driven sweep written as CSV, the same path the `sweep`
// subcommand takes.

use ri_collide::cli::{parse_config, sweep, worker_pool, Quantity};

const CONFIG: &str = "
# resonant, energy-conserving couplings
omega = 1
jxx = 1
jyy = 1
beta = 1
tau = 10
vary = jzz
from = 0
to = 1
points = 11
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = parse_config(CONFIG)?;
    let table = sweep(
        &cfg,
        &[
            Quantity::Eta,
            Quantity::PInf,
            Quantity::Psi2,
            Quantity::NStarAn,
        ],
        &worker_pool()?,
    )?;
    table.write_csv(std::io::stdout().lock())?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
