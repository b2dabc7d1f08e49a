// Steady-state heat and work per collision across a `jzz` sweep. The
// dephasing bath never receives heat, yet coupling to it costs work.

use ri_collide::engine::Collision;
use ri_collide::thermo::{energetics_with, heat_bath1_closed};
use ri_collide::{ModelParams, QubitState};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{:>5} {:>12} {:>12} {:>12} {:>12} {:>10}",
        "jzz", "q1", "q2", "w1", "w2", "balance"
    );
    for k in 0..=8 {
        let jz = 0.5 * k as f64;
        let params = ModelParams::new(1.0, 2.0, 2.0, 1.0, jz, 1.0, 1.0);
        let collision = Collision::new(&params)?;
        let steady = QubitState::diagonal(collision.target_population()?)?;
        let e = energetics_with(&collision, &steady)?;
        assert!((e.q1 - heat_bath1_closed(&steady, &params)?).abs() < 1e-10);
        println!(
            "{jz:>5} {:>12.4e} {:>12.1e} {:>12.4e} {:>12.4e} {:>10.1e}",
            e.q1,
            e.q2,
            e.w1,
            e.w2,
            e.balance()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
