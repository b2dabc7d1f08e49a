// The dense kernel on its own: Kronecker products, the Hermitian
// exponential, partial traces and trace distance.

use num_complex::Complex64;
use ri_collide::qmath::{
    hermitian_expm, kron_all, partial_trace, pauli, trace_distance, ComplexMatrix, DensityMatrix,
    Site,
};
use ri_collide::QubitState;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (x, z, id) = (pauli::x(), pauli::z(), pauli::identity());

    // Z (x) I (x) Z on the three-qubit register
    let zz = kron_all(&[&z, &id, &z]);
    println!(
        "diag(Z I Z) = {:?}",
        (0..8).map(|k| zz[(k, k)].re).collect::<Vec<_>>()
    );

    // exp(-i X t) at t = pi/2 is -i X
    let u = hermitian_expm(&x, std::f64::consts::FRAC_PI_2)?;
    println!("exp(-i pi/2 X)[0][1] = {:.3}", u[(0, 1)]);
    assert!((u[(0, 1)] - Complex64::new(0.0, -1.0)).norm() < 1e-12);

    // tracing a product state returns its factors
    let system = QubitState::new(0.8, Complex64::new(0.1, 0.3))?;
    let mixed = ComplexMatrix::diag(&[0.5, 0.5]);
    let joint = kron_all(&[&system.to_matrix(), &mixed, &mixed]);
    let reduced = partial_trace(&joint, &[Site::System])?;
    assert!((&reduced - &system.to_matrix()).max_abs() < 1e-15);

    let d = trace_distance(
        &DensityMatrix::new(reduced)?,
        &DensityMatrix::maximally_mixed(2),
    )?;
    println!("trace distance to the maximally mixed state: {d:.6}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
