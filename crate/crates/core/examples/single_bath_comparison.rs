// Two ancillas versus one ancilla carrying all three couplings. Splitting
// the couplings across two baths typically preserves more coherence.

use ri_collide::analytics::{psi_sq_ec_resonant, psi_tilde_heisenberg};
use ri_collide::ModelParams;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut two_bath_wins = 0;
    let points = 51;
    for k in 0..points {
        let jz = 5.0 * k as f64 / (points - 1) as f64;
        let p = ModelParams::resonant(1.0, 1.0, jz, 1.0, 10.0);
        let two = psi_sq_ec_resonant(&p)?;
        let one = psi_tilde_heisenberg(&p, 0.0).norm_sqr();
        if two >= one {
            two_bath_wins += 1;
        }
        if k % 10 == 0 {
            println!("jzz {jz:.1}: two baths {two:.6}, single bath {one:.6}");
        }
    }
    println!("two baths keep at least as much coherence at {two_bath_wins}/{points} points");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
