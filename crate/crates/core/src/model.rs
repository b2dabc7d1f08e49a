//! Model inputs: microscopic constants, qubit states, Hamiltonians and the
//! derived energy scales that every closed form is written in.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qmath::{kron_all, pauli, ComplexMatrix, DensityMatrix, TOLERANCES};

/// Microscopic constants of one collision.
///
/// `beta1` is the inverse temperature of the dissipative (`xx`/`yy`) bath,
/// `beta2` that of the dephasing (`zz`) bath. Closed forms assume they match.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub omega_s: f64,
    pub omega_a: f64,
    pub j_xx: f64,
    pub j_yy: f64,
    pub j_zz: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub tau: f64,
}

impl ModelParams {
    /// Parameters with a single inverse temperature shared by both baths.
    pub fn new(
        omega_s: f64,
        omega_a: f64,
        j_xx: f64,
        j_yy: f64,
        j_zz: f64,
        beta: f64,
        tau: f64,
    ) -> Self {
        Self {
            omega_s,
            omega_a,
            j_xx,
            j_yy,
            j_zz,
            beta1: beta,
            beta2: beta,
            tau,
        }
    }

    /// Resonant (`omega_s = omega_a = omega`), energy-conserving (`j_xx = j_yy = j_xy`) parameters.
    pub fn resonant(omega: f64, j_xy: f64, j_zz: f64, beta: f64, tau: f64) -> Self {
        Self::new(omega, omega, j_xy, j_xy, j_zz, beta, tau)
    }

    pub fn with_betas(mut self, beta1: f64, beta2: f64) -> Self {
        self.beta1 = beta1;
        self.beta2 = beta2;
        self
    }

    pub fn with_j_zz(mut self, j_zz: f64) -> Self {
        self.j_zz = j_zz;
        self
    }

    pub fn with_tau(mut self, tau: f64) -> Self {
        self.tau = tau;
        self
    }

    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta1 = beta;
        self.beta2 = beta;
        self
    }

    pub fn j_plus(&self) -> f64 {
        self.j_xx + self.j_yy
    }

    pub fn j_minus(&self) -> f64 {
        self.j_xx - self.j_yy
    }

    /// Ground-state population of the dissipative-bath ancilla.
    pub fn p_a1(&self) -> f64 {
        gibbs_ancilla(self.beta1, self.omega_a).p()
    }

    /// Ground-state population of the dephasing-bath ancilla.
    pub fn p_a2(&self) -> f64 {
        gibbs_ancilla(self.beta2, self.omega_a).p()
    }

    pub fn equal_temperatures(&self) -> bool {
        self.beta1 == self.beta2
    }

    /// Shared inverse temperature, if the baths agree.
    pub fn beta(&self) -> Result<f64> {
        validate_for_analytics(self)?;
        Ok(self.beta1)
    }

    /// `omega_s = omega_a` and `j_xx = j_yy`.
    pub fn is_energy_conserving_resonant(&self) -> bool {
        self.omega_s == self.omega_a && self.j_xx == self.j_yy
    }

    pub fn validate(&self) -> Result<()> {
        let all = [
            self.omega_s,
            self.omega_a,
            self.j_xx,
            self.j_yy,
            self.j_zz,
            self.beta1,
            self.beta2,
            self.tau,
        ];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParams("all parameters must be finite".into()));
        }
        if self.omega_s < 0.0 || self.omega_a < 0.0 {
            return Err(Error::InvalidParams(
                "energy splittings must be >= 0".into(),
            ));
        }
        if self.beta1 < 0.0 || self.beta2 < 0.0 {
            return Err(Error::InvalidParams(
                "inverse temperatures must be >= 0".into(),
            ));
        }
        if self.tau <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "collision duration must be > 0, got {}",
                self.tau
            )));
        }
        Ok(())
    }
}

/// Closed forms assume a single bath temperature.
pub fn validate_for_analytics(params: &ModelParams) -> Result<()> {
    if params.equal_temperatures() {
        Ok(())
    } else {
        Err(Error::UnequalTemperatures {
            beta1: params.beta1,
            beta2: params.beta2,
        })
    }
}

/// Qubit state `[[p, c], [c*, 1-p]]`, `p` being the ground-state population.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState {
    p: f64,
    c: Complex64,
}

impl QubitState {
    pub fn new(p: f64, c: Complex64) -> Result<Self> {
        let slack = TOLERANCES.qubit_positivity;
        if !p.is_finite() || !c.re.is_finite() || !c.im.is_finite() {
            return Err(Error::InvalidState("non-finite qubit entries".into()));
        }
        if p < -slack || p > 1.0 + slack {
            return Err(Error::InvalidState(format!(
                "population {p} outside [0, 1]"
            )));
        }
        if c.norm_sqr() > p * (1.0 - p) + slack {
            return Err(Error::InvalidState(format!(
                "|c|^2 = {:e} exceeds p(1-p) = {:e}",
                c.norm_sqr(),
                p * (1.0 - p)
            )));
        }
        Ok(Self { p, c })
    }

    pub fn diagonal(p: f64) -> Result<Self> {
        Self::new(p, Complex64::new(0.0, 0.0))
    }

    pub fn maximally_mixed() -> Self {
        Self {
            p: 0.5,
            c: Complex64::new(0.0, 0.0),
        }
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    /// Polar phase of the coherence. Undefined for `c = 0`.
    pub fn chi(&self) -> Option<f64> {
        if self.c.norm() > 0.0 {
            Some(self.c.arg())
        } else {
            None
        }
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::diag(&[self.p, 1.0 - self.p]);
        m[(0, 1)] = self.c;
        m[(1, 0)] = self.c.conj();
        m
    }

    pub fn to_density_matrix(&self) -> DensityMatrix {
        DensityMatrix::new_unchecked(self.to_matrix())
    }

    /// Reads `p` and `c` off a 2x2 density matrix after validating it.
    pub fn from_matrix(m: &ComplexMatrix) -> Result<Self> {
        crate::qmath::validate_state(m)?;
        if m.rows() != 2 {
            return Err(Error::DimensionMismatch {
                left: m.rows(),
                right: 2,
            });
        }
        Self::new(m[(0, 0)].re, m[(0, 1)])
    }
}

/// Gibbs state of an ancilla with splitting `omega_a` at inverse temperature `beta`.
pub fn gibbs_ancilla(beta: f64, omega_a: f64) -> QubitState {
    let p = 1.0 / (1.0 + (-beta * omega_a).exp());
    QubitState {
        p,
        c: Complex64::new(0.0, 0.0),
    }
}

/// All 8x8 operators of one collision, in `S (x) A1 (x) A2` ordering.
#[derive(Debug, Clone)]
pub struct Hamiltonians {
    pub h_s: ComplexMatrix,
    pub h_a1: ComplexMatrix,
    pub h_a2: ComplexMatrix,
    pub h_i1: ComplexMatrix,
    pub h_i2: ComplexMatrix,
    pub h_tot: ComplexMatrix,
}

pub fn build_hamiltonians(params: &ModelParams) -> Hamiltonians {
    let id = pauli::identity();
    let (x, y, z) = (pauli::x(), pauli::y(), pauli::z());
    let real = |v: f64| Complex64::new(v, 0.0);

    let h_s = kron_all(&[&z, &id, &id]).scale(real(-params.omega_s / 2.0));
    let h_a1 = kron_all(&[&id, &z, &id]).scale(real(-params.omega_a / 2.0));
    let h_a2 = kron_all(&[&id, &id, &z]).scale(real(-params.omega_a / 2.0));
    let h_i1 = &kron_all(&[&x, &x, &id]).scale(real(params.j_xx))
        + &kron_all(&[&y, &y, &id]).scale(real(params.j_yy));
    let h_i2 = kron_all(&[&z, &id, &z]).scale(real(params.j_zz));
    let h_tot = &(&(&(&h_s + &h_a1) + &h_a2) + &h_i1) + &h_i2;
    Hamiltonians {
        h_s,
        h_a1,
        h_a2,
        h_i1,
        h_i2,
        h_tot,
    }
}

/// Energy scales governing the four transition channels of one collision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyParams {
    pub xi: f64,
    pub nu: f64,
    pub kappa: f64,
    pub alpha: f64,
    pub j_plus: f64,
    pub j_minus: f64,
}

pub fn energy_params(params: &ModelParams) -> EnergyParams {
    let j_plus = params.j_plus();
    let j_minus = params.j_minus();
    let (ws, wa, jz) = (params.omega_s, params.omega_a, params.j_zz);
    EnergyParams {
        xi: (2.0 * j_plus).hypot(2.0 * jz + wa - ws),
        nu: (2.0 * j_plus).hypot(2.0 * jz - wa + ws),
        kappa: (2.0 * j_minus).hypot(-2.0 * jz + wa + ws),
        alpha: (2.0 * j_minus).hypot(2.0 * jz + wa + ws),
        j_plus,
        j_minus,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmath::kron;

    #[test]
    fn gibbs_ancilla_examples() {
        let p = gibbs_ancilla(1.0, 1.0).p();
        assert!((p - 0.7310585786300049).abs() < 1e-15);
        assert!((p - 0.73).abs() < 5e-3);
        assert_eq!(gibbs_ancilla(0.0, 1.0).p(), 0.5);
        assert!((gibbs_ancilla(50.0, 1.0).p() - 1.0).abs() < 1e-12);
        assert_eq!(gibbs_ancilla(1.0, 1.0).c(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn noninteracting_total_hamiltonian_is_diagonal() {
        let params = ModelParams::new(1.3, 0.7, 0.0, 0.0, 0.0, 1.0, 1.0);
        let h = build_hamiltonians(&params);
        for i in 0..8 {
            let (s, a1, a2) = ((i >> 2) & 1, (i >> 1) & 1, i & 1);
            let sign = |bit: usize| if bit == 0 { -1.0 } else { 1.0 };
            let expected = sign(s) * 1.3 / 2.0 + (sign(a1) + sign(a2)) * 0.7 / 2.0;
            assert!((h.h_tot[(i, i)].re - expected).abs() < 1e-15);
            for j in 0..8 {
                if i != j {
                    assert_eq!(h.h_tot[(i, j)].norm(), 0.0);
                }
            }
        }
        // equal splittings: all-ground entry is -(omega_s + 2 omega_a)/2
        let h = build_hamiltonians(&ModelParams::new(1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0));
        assert!((h.h_tot[(0, 0)].re + 1.5).abs() < 1e-15);
        assert!((h.h_tot[(7, 7)].re - 1.5).abs() < 1e-15);
    }

    #[test]
    fn dephasing_coupling_commutes_with_second_ancilla() {
        let params = ModelParams::new(0.9, 1.7, 2.1, -0.4, 3.3, 0.5, 2.0);
        let h = build_hamiltonians(&params);
        assert!(h.h_tot.commutator(&h.h_a2).max_abs() <= 1e-12);
    }

    #[test]
    fn dissipative_coupling_matches_direct_assembly() {
        let params = ModelParams::new(1.0, 1.0, 0.8, 1.9, 0.0, 1.0, 1.0);
        let h = build_hamiltonians(&params);
        let xx = kron(&kron(&pauli::x(), &pauli::x()), &pauli::identity());
        let yy = kron(&kron(&pauli::y(), &pauli::y()), &pauli::identity());
        // sigma_x sigma_x swaps |00>,|11> and |01>,|10>; sigma_y sigma_y the same with signs
        for i in 0..8 {
            for j in 0..8 {
                let want = xx[(i, j)] * 0.8 + yy[(i, j)] * 1.9;
                assert!((h.h_i1[(i, j)] - want).norm() < 1e-15);
            }
        }
        // spot check: <000| H_I1 |110> = J_xx - J_yy, <010| H_I1 |100> = J_xx + J_yy
        assert!((h.h_i1[(0, 6)].re - (0.8 - 1.9)).abs() < 1e-15);
        assert!((h.h_i1[(2, 4)].re - (0.8 + 1.9)).abs() < 1e-15);
    }

    #[test]
    fn all_operators_hermitian_and_sum_to_total() {
        let params = ModelParams::new(0.3, 2.2, 1.1, 0.6, -0.9, 1.0, 1.0);
        let h = build_hamiltonians(&params);
        for op in [&h.h_s, &h.h_a1, &h.h_a2, &h.h_i1, &h.h_i2, &h.h_tot] {
            assert_eq!(op.rows(), 8);
            assert!(op.hermiticity_deviation() < 1e-15);
        }
        let sum = &(&(&(&h.h_s + &h.h_a1) + &h.h_a2) + &h.h_i1) + &h.h_i2;
        assert!((&sum - &h.h_tot).max_abs() < 1e-15);
    }

    #[test]
    fn energy_params_examples() {
        let e = energy_params(&ModelParams::new(1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0));
        assert_eq!((e.xi, e.nu, e.kappa, e.alpha), (4.0, 4.0, 2.0, 2.0));

        let (j, jz, w) = (0.7, 1.3, 0.9);
        let e = energy_params(&ModelParams::resonant(w, j, jz, 1.0, 1.0));
        let common = 2.0 * (4.0 * j * j + jz * jz).sqrt();
        assert!((e.xi - common).abs() < 1e-14 && (e.nu - common).abs() < 1e-14);
        assert!((e.kappa - 2.0 * (w - jz).abs()).abs() < 1e-14);
        assert!((e.alpha - 2.0 * (w + jz)).abs() < 1e-14);

        let (jz, w, jj) = (1e4, 1.0, 1.0);
        let e = energy_params(&ModelParams::new(w, w, jj, jj, jz, 1.0, 1.0));
        for v in [e.xi, e.nu, e.kappa, e.alpha] {
            assert!(((v - 2.0 * jz) / (2.0 * jz)).abs() <= (w + jj) / jz);
        }
    }

    #[test]
    fn energy_params_respect_lower_bounds() {
        let e = energy_params(&ModelParams::new(0.4, 1.9, -1.2, 0.5, 2.5, 1.0, 1.0));
        assert!(e.xi >= 2.0 * e.j_plus.abs() && e.nu >= 2.0 * e.j_plus.abs());
        assert!(e.kappa >= 2.0 * e.j_minus.abs() && e.alpha >= 2.0 * e.j_minus.abs());
    }

    #[test]
    fn analytics_gate() {
        let p = ModelParams::new(1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0);
        assert!(validate_for_analytics(&p).is_ok());
        assert!(validate_for_analytics(&p.with_beta(0.0)).is_ok());
        assert_eq!(
            validate_for_analytics(&p.with_betas(1.0, 2.0)),
            Err(Error::UnequalTemperatures {
                beta1: 1.0,
                beta2: 2.0
            })
        );
    }

    #[test]
    fn qubit_state_invariants() {
        assert!(QubitState::new(0.5, Complex64::new(0.5, 0.0)).is_ok());
        assert!(QubitState::new(0.5, Complex64::new(0.51, 0.0)).is_err());
        assert!(QubitState::new(1.1, Complex64::new(0.0, 0.0)).is_err());
        assert_eq!(QubitState::maximally_mixed().chi(), None);
        let s = QubitState::new(0.673, Complex64::new(0.45, -0.084)).unwrap();
        assert!((s.chi().unwrap() - (-0.084f64).atan2(0.45)).abs() < 1e-15);
        assert_eq!(QubitState::from_matrix(&s.to_matrix()).unwrap(), s);
    }

    #[test]
    fn params_validation() {
        let p = ModelParams::new(1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0);
        assert!(p.validate().is_ok());
        assert!(p.with_tau(0.0).validate().is_err());
        assert!(p.with_betas(-1.0, 1.0).validate().is_err());
        assert!(p.with_j_zz(f64::NAN).validate().is_err());
    }
}
