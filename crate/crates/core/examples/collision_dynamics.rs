// Trajectories of the system qubit with and without the dephasing bath.
// A strong `zz` coupling slows down population relaxation.

use ri_collide::engine::evolve;
use ri_collide::{ModelParams, QubitState};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let start = QubitState::diagonal(0.0)?;
    println!("{:>4} {:>10} {:>10}", "n", "jzz=0", "jzz=5");
    let weak = evolve(&start, &ModelParams::resonant(1.0, 1.0, 0.0, 1.0, 10.0), 40)?;
    let strong = evolve(&start, &ModelParams::resonant(1.0, 1.0, 5.0, 1.0, 10.0), 40)?;
    for (a, b) in weak.records.iter().zip(&strong.records).step_by(5) {
        println!("{:>4} {:>10.6} {:>10.6}", a.n, a.p, b.p);
    }
    let p_a = weak.params.p_a1();
    println!("ancilla population {p_a:.6}");
    println!(
        "distance to target after 40 collisions: {:.2e} (jzz=0) vs {:.2e} (jzz=5)",
        weak.last().distance_to_target,
        strong.last().distance_to_target
    );
    assert!(strong.last().distance_to_target > weak.last().distance_to_target);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
