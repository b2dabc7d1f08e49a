// The coherence multiplier `psi` and its modulus. For short collisions the
// dephasing bath speeds up decoherence; for long ones it can slow it down.

use num_complex::Complex64;
use ri_collide::analytics::{coherence_map, psi_sq_ec_resonant, psi_sq_zero_jzz};
use ri_collide::engine::Collision;
use ri_collide::{ModelParams, QubitState};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for tau in [0.01, 10.0] {
        let base = ModelParams::resonant(1.0, 1.0, 0.0, 1.0, tau);
        println!("tau = {tau}: |psi_0|^2 = {:.6}", psi_sq_zero_jzz(&base)?);
        for jz in [0.5, 1.0, 2.0, 3.0] {
            println!(
                "    jzz = {jz}: |psi|^2 = {:.6}",
                psi_sq_ec_resonant(&base.with_j_zz(jz))?
            );
        }
    }

    // with J_xx != J_yy the map mixes c and c*, so psi depends on the phase
    let params = ModelParams::new(1.0, 1.0, 1.2, 0.3, 0.7, 1.0, 0.8);
    let map = coherence_map(&params)?;
    let collision = Collision::new(&params)?;
    for chi in [0.0, 1.0, 2.0] {
        let c = Complex64::from_polar(0.3, chi);
        let simulated = collision.step(&QubitState::new(0.5, c)?)?.c();
        println!(
            "chi = {chi}: |psi| = {:.6}, simulated |c'|/|c| = {:.6}",
            map.psi(chi).norm(),
            simulated.norm() / 0.3
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
