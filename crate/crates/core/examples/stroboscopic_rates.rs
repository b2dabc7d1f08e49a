// Rate constants of the short-collision limit and how well the resulting
// equations of motion reproduce one exact collision.

use ri_collide::analytics::{eom_coefficients, eta_exact, psi_exact};
use ri_collide::ModelParams;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let gamma: f64 = 0.5;
    for tau in [1e-1, 1e-2, 1e-3] {
        let j = (gamma / tau).sqrt();
        let params = ModelParams::resonant(1.0, j, 0.3 * j, 1.0, tau);
        let eom = eom_coefficients(&params)?;
        let exact_rate = (1.0 - eta_exact(&params)?) / tau;
        let exact_coh = (psi_exact(&params, 0.0)? - 1.0) / tau;
        println!(
            "tau {tau:.0e}: Gamma {:.3}, Gamma_zz {:.3}, population rate {:.6} vs exact {:.6}, coherence rate {:.4} vs {:.4}",
            eom.rates.gamma,
            eom.rates.gamma_zz,
            eom.population_rate,
            exact_rate,
            eom.coherence_rate(),
            exact_coh
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
