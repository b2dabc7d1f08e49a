// Number of collisions needed to come within `epsilon` of the steady state,
// simulated versus the closed-form bound.

use ri_collide::engine::{runtime_analytic, runtime_simulated, RuntimeQuery};
use ri_collide::{ModelParams, QubitState};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = RuntimeQuery::new(1e-6, 10_000_000)?;
    let start = QubitState::maximally_mixed();
    println!("{:>5} {:>6} {:>8} {:>8}", "beta", "jzz", "n_sim", "n_an");
    for beta in [0.5, 1.0, 2.0] {
        for jz in [0.0, 0.4, 1.0, 2.0] {
            let params = ModelParams::resonant(1.0, 1.0, jz, beta, 10.0);
            let sim = runtime_simulated(&start, &params, &q)?;
            let an = runtime_analytic(&start, &params, &q)?;
            println!("{beta:>5} {jz:>6} {sim:>8} {an:>8}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
