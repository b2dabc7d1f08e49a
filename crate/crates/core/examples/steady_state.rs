// Where the system ends up. On resonance with `J_xx = J_yy` it thermalizes
// to the ancilla temperature; otherwise it settles at a different population.

use ri_collide::analytics::{eta_exact, p_infinity};
use ri_collide::engine::{steady_state, Collision, RuntimeQuery};
use ri_collide::{ModelParams, QubitState};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = RuntimeQuery::new(1e-12, 1_000_000)?;
    let start = QubitState::maximally_mixed();

    let cases = [
        (
            "energy conserving",
            ModelParams::resonant(1.0, 1.0, 0.5, 1.0, 1.0),
        ),
        (
            "unequal couplings",
            ModelParams::new(1.0, 1.0, 1.0, 0.4, 0.5, 1.0, 1.0),
        ),
        (
            "detuned",
            ModelParams::new(1.0, 1.6, 0.8, 0.8, 0.5, 1.0, 1.0),
        ),
    ];
    for (label, params) in cases {
        let (fixed, n) = steady_state(&start, &params, &q)?;
        let p_inf = p_infinity(&params)?;
        println!(
            "{label:>18}: eta {:.6}, p_inf {p_inf:.9}, simulated {:.9} after {n} steps, p_A {:.6}",
            eta_exact(&params)?,
            fixed.p(),
            params.p_a1()
        );
    }

    // different bath temperatures: no closed form, the fixed point is numeric
    let hot_cold = ModelParams::new(1.0, 1.0, 1.0, 1.0, 0.8, 0.5, 1.0).with_betas(0.5, 3.0);
    let collision = Collision::new(&hot_cold)?;
    let (fixed, _) = steady_state(&start, &hot_cold, &q)?;
    println!(
        "unequal temperatures: fixed point {:.9}, affine estimate {:.9}",
        fixed.p(),
        collision.numeric_p_infinity()?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
