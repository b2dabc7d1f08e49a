//! Heat and work per collision.
//!
//! Every quantity is the change of an expectation value over one collision,
//! `Tr[(U^dagger H U - H) rho]` with `rho = rho_S (x) rho_A1 (x) rho_A2`.
//! Heat is the change of a bath's bare energy and work the change of its
//! interaction energy. Because the ancillas are diagonal, the interaction
//! energy starts at zero and `W_i` is simply its post-collision value.

use crate::analytics::half_sin_over;
use crate::engine::Collision;
use crate::error::{Error, Result};
use crate::model::{
    build_hamiltonians, energy_params, validate_for_analytics, Hamiltonians, ModelParams,
    QubitState,
};
use crate::qmath::ComplexMatrix;

/// Balance tolerance of the energy ledger.
pub const LEDGER_TOLERANCE: f64 = 1e-10;
/// `|Q2|` may not exceed this.
pub const DEPHASING_HEAT_TOLERANCE: f64 = 1e-12;

/// Energy bookkeeping of one collision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepEnergetics {
    pub q1: f64,
    pub q2: f64,
    pub w1: f64,
    pub w2: f64,
    pub delta_e_s: f64,
}

impl StepEnergetics {
    /// `delta_e_s + q1 + q2 + w1 + w2`, zero for a closed unitary collision.
    pub fn balance(&self) -> f64 {
        self.delta_e_s + self.q1 + self.q2 + self.w1 + self.w2
    }

    pub fn check(&self) -> Result<()> {
        if self.balance().abs() > LEDGER_TOLERANCE {
            return Err(Error::LedgerViolation {
                what: "energy balance",
                residual: self.balance(),
            });
        }
        if self.q2.abs() > DEPHASING_HEAT_TOLERANCE {
            return Err(Error::LedgerViolation {
                what: "dephasing-bath heat",
                residual: self.q2,
            });
        }
        Ok(())
    }
}

/// Expectation changes of all five energy terms from one collision.
struct Changes {
    hams: Hamiltonians,
    before: ComplexMatrix,
    after: ComplexMatrix,
}

impl Changes {
    fn new(collision: &Collision, state: &QubitState) -> Self {
        let before = collision.joint_state(state);
        let u = collision.unitary();
        let after = &(u * &before) * &u.adjoint();
        Self {
            hams: build_hamiltonians(collision.params()),
            before,
            after,
        }
    }

    fn of(&self, h: &ComplexMatrix) -> f64 {
        (h.trace_product(&self.after) - h.trace_product(&self.before)).re
    }
}

/// All five energy changes of one collision, checked against the ledger.
pub fn energetics_step(state: &QubitState, params: &ModelParams) -> Result<StepEnergetics> {
    energetics_with(&Collision::new(params)?, state)
}

/// [`energetics_step`] reusing a cached collision.
pub fn energetics_with(collision: &Collision, state: &QubitState) -> Result<StepEnergetics> {
    let d = Changes::new(collision, state);
    let e = StepEnergetics {
        q1: d.of(&d.hams.h_a1),
        q2: d.of(&d.hams.h_a2),
        w1: d.of(&d.hams.h_i1),
        w2: d.of(&d.hams.h_i2),
        delta_e_s: d.of(&d.hams.h_s),
    };
    e.check()?;
    Ok(e)
}

fn trace_variant(
    state: &QubitState,
    params: &ModelParams,
    pick: fn(&Hamiltonians) -> &ComplexMatrix,
) -> Result<f64> {
    let d = Changes::new(&Collision::new(params)?, state);
    Ok(d.of(pick(&d.hams)))
}

/// Heat into the dissipative bath from its trace definition.
pub fn heat_bath1(state: &QubitState, params: &ModelParams) -> Result<f64> {
    trace_variant(state, params, |h| &h.h_a1)
}

/// Heat into the dephasing bath. Identically zero because `H_A2` commutes
/// with the total Hamiltonian, at any pair of temperatures.
pub fn heat_bath2(state: &QubitState, params: &ModelParams) -> Result<f64> {
    trace_variant(state, params, |h| &h.h_a2)
}

pub fn work_bath1(state: &QubitState, params: &ModelParams) -> Result<f64> {
    trace_variant(state, params, |h| &h.h_i1)
}

pub fn work_bath2(state: &QubitState, params: &ModelParams) -> Result<f64> {
    trace_variant(state, params, |h| &h.h_i2)
}

/// Largest entry of `[H_tot, H_A2]`.
pub fn dephasing_commutator_norm(params: &ModelParams) -> f64 {
    let h = build_hamiltonians(params);
    h.h_tot.commutator(&h.h_a2).max_abs()
}

/// The four channel-resolved population transfers of one collision.
///
/// Each is `4 J_pm^2 sin^2(x tau/2)/x^2` times an ancilla weight and a
/// population gap, for the channels `x` in `(nu, alpha, kappa, xi)`.
struct Channels {
    nu: f64,
    alpha: f64,
    kappa: f64,
    xi: f64,
}

fn channels(state: &QubitState, params: &ModelParams) -> Result<Channels> {
    validate_for_analytics(params)?;
    let p_a = params.p_a1();
    let p = state.p();
    let e = energy_params(params);
    let s2 = |x: f64| half_sin_over(x, params.tau).powi(2);
    let (jp2, jm2) = (e.j_plus.powi(2), e.j_minus.powi(2));
    Ok(Channels {
        nu: 4.0 * jp2 * s2(e.nu) * (1.0 - p_a) * (p - p_a),
        alpha: 4.0 * jm2 * s2(e.alpha) * (1.0 - p_a) * (p - (1.0 - p_a)),
        kappa: 4.0 * jm2 * s2(e.kappa) * p_a * (p - (1.0 - p_a)),
        xi: 4.0 * jp2 * s2(e.xi) * p_a * (p - p_a),
    })
}

/// Closed form of [`heat_bath1`]; needs equal bath temperatures.
pub fn heat_bath1_closed(state: &QubitState, params: &ModelParams) -> Result<f64> {
    let ch = channels(state, params)?;
    Ok(params.omega_a * (-ch.nu + ch.alpha + ch.kappa - ch.xi))
}

/// Closed form of [`work_bath1`]; needs equal bath temperatures.
pub fn work_bath1_closed(state: &QubitState, params: &ModelParams) -> Result<f64> {
    let ch = channels(state, params)?;
    let (ws, wa, jz) = (params.omega_s, params.omega_a, params.j_zz);
    Ok(
        (2.0 * jz - wa - ws) * ch.kappa + (2.0 * jz + wa - ws) * ch.xi
            - (2.0 * jz + wa + ws) * ch.alpha
            - (2.0 * jz - wa + ws) * ch.nu,
    )
}

/// Closed form of [`work_bath2`]; every term carries `2 J_zz`.
pub fn work_bath2_closed(state: &QubitState, params: &ModelParams) -> Result<f64> {
    let ch = channels(state, params)?;
    Ok(2.0 * params.j_zz * (-ch.kappa - ch.xi + ch.alpha + ch.nu))
}
