// Approximate forms against the exact coefficients, each with its
// regime-quality ratio (small means the approximation applies).

use ri_collide::analytics::{
    eta0, eta_exact, eta_jtau1, eta_large_jzz, eta_series_tau4, psi_sq_ec_resonant, psi_sq_jtau1,
    psi_sq_large_jzz, psi_sq_series,
};
use ri_collide::ModelParams;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let strong = ModelParams::resonant(1.0, 1.0, 50.0, 1.0, 1.0);
    let a = eta_large_jzz(&strong)?;
    println!(
        "large jzz: eta {:.6} vs {:.6}, |psi|^2 {:.6} vs {:.6} (ratio {:.3})",
        eta_exact(&strong)?,
        a.value,
        psi_sq_ec_resonant(&strong)?,
        psi_sq_large_jzz(&strong)?.value,
        a.regime_ratio
    );

    let short = ModelParams::resonant(1.0, 1.0, 0.5, 1.0, 0.01);
    let s = eta_series_tau4(&short)?;
    println!(
        "short tau: eta {:.12} vs {:.12}, |psi|^2 {:.12} vs {:.12} (ratio {:.3})",
        eta_exact(&short)?,
        s.value,
        psi_sq_ec_resonant(&short)?,
        psi_sq_series(&short)?.value,
        s.regime_ratio
    );

    let weak = ModelParams::resonant(1.0, 1e-3, 1e-3, 10.0, 600.0);
    let w = eta_jtau1(&weak);
    println!("weak, long: eta {:.6} vs {:.6} (without dephasing {:.6}), |psi|^2 {:.6} vs {:.6} (ratio {:.0e})",
        eta_exact(&weak)?, w.value, eta0(&weak).value, psi_sq_ec_resonant(&weak)?, psi_sq_jtau1(&weak)?.value, w.regime_ratio);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
