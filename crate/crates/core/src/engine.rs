//! Collision-by-collision execution of the repeated-interaction map.
//!
//! [`ri_step`] is the literal map: build `rho_S (x) rho_A1 (x) rho_A2`,
//! conjugate by the collision unitary and trace the ancillas out. A
//! [`Collision`] caches the unitary together with the 2x2 channel it induces
//! (the images of the four matrix units under that same literal map), so long
//! trajectories cost a handful of flops per step.

use num_complex::Complex64;

use crate::analytics;
use crate::error::{Error, Result};
use crate::model::{build_hamiltonians, gibbs_ancilla, ModelParams, QubitState};
use crate::qmath::{hermitian_expm, kron, partial_trace, ComplexMatrix, Site};

/// `exp(-i H_tot tau)` for one collision.
pub fn collision_unitary(params: &ModelParams) -> Result<ComplexMatrix> {
    params.validate()?;
    hermitian_expm(&build_hamiltonians(params).h_tot, params.tau)
}

/// Fresh ancilla pair `rho_A1 (x) rho_A2` at the two bath temperatures.
pub fn ancilla_state(params: &ModelParams) -> ComplexMatrix {
    kron(
        &gibbs_ancilla(params.beta1, params.omega_a).to_matrix(),
        &gibbs_ancilla(params.beta2, params.omega_a).to_matrix(),
    )
}

fn apply_literal(
    system: &ComplexMatrix,
    ancillas: &ComplexMatrix,
    u: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    let joint = kron(system, ancillas);
    let evolved = &(u * &joint) * &u.adjoint();
    partial_trace(&evolved, &[Site::System])
}

/// One collision: fresh Gibbs ancillas, unitary conjugation, partial trace.
pub fn ri_step(state: &QubitState, params: &ModelParams, u: &ComplexMatrix) -> Result<QubitState> {
    if u.rows() != 8 || !u.is_square() {
        return Err(Error::DimensionMismatch {
            left: u.rows(),
            right: 8,
        });
    }
    let out = apply_literal(&state.to_matrix(), &ancilla_state(params), u)?;
    QubitState::from_matrix(&out)
}

/// Cached data for repeated collisions with fixed parameters.
#[derive(Debug, Clone)]
pub struct Collision {
    params: ModelParams,
    unitary: ComplexMatrix,
    ancillas: ComplexMatrix,
    // image of |i><j| under the map, indexed [2i + j]
    units: [ComplexMatrix; 4],
}

impl Collision {
    pub fn new(params: &ModelParams) -> Result<Self> {
        let unitary = collision_unitary(params)?;
        let ancillas = ancilla_state(params);
        let unit = |k: usize| -> Result<ComplexMatrix> {
            let mut e = ComplexMatrix::zeros(2, 2);
            e[(k / 2, k % 2)] = Complex64::new(1.0, 0.0);
            apply_literal(&e, &ancillas, &unitary)
        };
        let units = [unit(0)?, unit(1)?, unit(2)?, unit(3)?];
        Ok(Self {
            params: *params,
            unitary,
            ancillas,
            units,
        })
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn unitary(&self) -> &ComplexMatrix {
        &self.unitary
    }

    /// `rho_S (x) rho_A1 (x) rho_A2` before the collision.
    pub fn joint_state(&self, state: &QubitState) -> ComplexMatrix {
        kron(&state.to_matrix(), &self.ancillas)
    }

    /// The literal 8x8 map.
    pub fn step_literal(&self, state: &QubitState) -> Result<QubitState> {
        QubitState::from_matrix(&apply_literal(
            &state.to_matrix(),
            &self.ancillas,
            &self.unitary,
        )?)
    }

    /// Post-collision `(p, c)` through the cached channel, unvalidated.
    pub fn map_raw(&self, p: f64, c: Complex64) -> (f64, Complex64) {
        let rho = [
            Complex64::new(p, 0.0),
            c,
            c.conj(),
            Complex64::new(1.0 - p, 0.0),
        ];
        let mut p_out = Complex64::new(0.0, 0.0);
        let mut c_out = Complex64::new(0.0, 0.0);
        for (weight, image) in rho.iter().zip(&self.units) {
            p_out += weight * image[(0, 0)];
            c_out += weight * image[(0, 1)];
        }
        (p_out.re, c_out)
    }

    /// One collision through the cached channel.
    pub fn step(&self, state: &QubitState) -> Result<QubitState> {
        let (p, c) = self.map_raw(state.p(), state.c());
        QubitState::new(p, c)
    }

    /// `(eta, 1 - eta)` read off the channel: the population update is affine
    /// in `p` and blind to the coherence.
    fn population_affine(&self) -> (f64, f64, f64) {
        let from_ground = self.units[0][(0, 0)].re;
        let from_excited = self.units[3][(0, 0)].re;
        let eta = from_ground - from_excited;
        let deficit = (1.0 - from_ground) + from_excited;
        (eta, deficit, from_excited)
    }

    /// Relaxation coefficient of the simulated map (valid at any temperatures).
    pub fn numeric_eta(&self) -> f64 {
        self.population_affine().0
    }

    /// Fixed point of the simulated population map.
    pub fn numeric_p_infinity(&self) -> Result<f64> {
        let (_, deficit, offset) = self.population_affine();
        if deficit.abs() < analytics::FROZEN_CUTOFF {
            return Err(Error::NoSteadyState { gap: deficit.abs() });
        }
        Ok(offset / deficit)
    }

    /// Steady-state population: closed form when the baths share a
    /// temperature, otherwise the fixed point of the simulated map.
    pub fn target_population(&self) -> Result<f64> {
        if self.params.equal_temperatures() {
            analytics::p_infinity(&self.params)
        } else {
            self.numeric_p_infinity()
        }
    }
}

/// Trace distance between two qubit states, `sqrt(dp^2 + |dc|^2)`.
pub fn qubit_distance(a: &QubitState, b: &QubitState) -> f64 {
    (a.p() - b.p()).hypot((a.c() - b.c()).norm())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryRecord {
    pub n: usize,
    pub p: f64,
    pub c: Complex64,
    /// Trace distance to the steady state; `NaN` when there is none.
    pub distance_to_target: f64,
}

impl TrajectoryRecord {
    pub fn state(&self) -> QubitState {
        QubitState::new(self.p, self.c).expect("records are validated on construction")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub params: ModelParams,
    pub target: Option<QubitState>,
    pub records: Vec<TrajectoryRecord>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn last(&self) -> &TrajectoryRecord {
        self.records
            .last()
            .expect("a trajectory holds at least its initial state")
    }
}

/// Runs `n_steps` collisions, recording the initial state and every step.
pub fn evolve(initial: &QubitState, params: &ModelParams, n_steps: usize) -> Result<Trajectory> {
    let collision = Collision::new(params)?;
    evolve_with(&collision, initial, n_steps)
}

pub fn evolve_with(
    collision: &Collision,
    initial: &QubitState,
    n_steps: usize,
) -> Result<Trajectory> {
    let target = match collision.target_population() {
        Ok(p) => Some(QubitState::diagonal(p.clamp(0.0, 1.0))?),
        Err(Error::NoSteadyState { .. }) => None,
        Err(e) => return Err(e),
    };
    let distance = |s: &QubitState| target.as_ref().map_or(f64::NAN, |t| qubit_distance(s, t));

    let mut records = Vec::with_capacity(n_steps + 1);
    let mut state = *initial;
    records.push(TrajectoryRecord {
        n: 0,
        p: state.p(),
        c: state.c(),
        distance_to_target: distance(&state),
    });
    for n in 1..=n_steps {
        state = collision.step(&state)?;
        records.push(TrajectoryRecord {
            n,
            p: state.p(),
            c: state.c(),
            distance_to_target: distance(&state),
        });
    }
    Ok(Trajectory {
        params: *collision.params(),
        target,
        records,
    })
}

/// Trace-distance threshold and step cap for runtime studies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RuntimeQuery {
    pub epsilon: f64,
    pub max_steps: usize,
}

impl RuntimeQuery {
    pub fn new(epsilon: f64, max_steps: usize) -> Result<Self> {
        let q = Self { epsilon, max_steps };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "epsilon must be > 0, got {}",
                self.epsilon
            )));
        }
        if self.max_steps == 0 {
            return Err(Error::InvalidParams("max_steps must be positive".into()));
        }
        Ok(())
    }
}

/// Iterates until successive states differ by less than `epsilon / 10` for
/// three consecutive steps. Returns the fixed point and the step it was
/// declared at.
pub fn steady_state(
    initial: &QubitState,
    params: &ModelParams,
    q: &RuntimeQuery,
) -> Result<(QubitState, usize)> {
    q.validate()?;
    let collision = Collision::new(params)?;
    let mut state = *initial;
    let mut quiet = 0;
    for n in 1..=q.max_steps {
        let next = collision.step(&state)?;
        quiet = if qubit_distance(&next, &state) < q.epsilon / 10.0 {
            quiet + 1
        } else {
            0
        };
        state = next;
        if quiet == 3 {
            return Ok((state, n));
        }
    }
    Err(Error::NotConverged {
        max_steps: q.max_steps,
    })
}

/// Smallest `n` with the simulated state within `epsilon` of the steady state.
///
/// The target is `diag(p_inf, 1 - p_inf)` from the closed form when the baths
/// share a temperature. Otherwise it is the fixed point found by
/// [`steady_state`] along the same trajectory.
pub fn runtime_simulated(
    initial: &QubitState,
    params: &ModelParams,
    q: &RuntimeQuery,
) -> Result<usize> {
    q.validate()?;
    let collision = Collision::new(params)?;
    if (1.0 - collision.numeric_eta()).abs() < analytics::FROZEN_CUTOFF {
        return Err(Error::NoSteadyState {
            gap: (1.0 - collision.numeric_eta()).abs(),
        });
    }
    if params.equal_temperatures() {
        let target = QubitState::diagonal(analytics::p_infinity(params)?.clamp(0.0, 1.0))?;
        let mut state = *initial;
        for n in 0..=q.max_steps {
            if qubit_distance(&state, &target) <= q.epsilon {
                return Ok(n);
            }
            state = collision.step(&state)?;
        }
        return Err(Error::NotConverged {
            max_steps: q.max_steps,
        });
    }

    let (target, _) = steady_state(initial, params, q)?;
    let mut state = *initial;
    for n in 0..=q.max_steps {
        if qubit_distance(&state, &target) <= q.epsilon {
            return Ok(n);
        }
        state = collision.step(&state)?;
    }
    Err(Error::NotConverged {
        max_steps: q.max_steps,
    })
}

/// Closed-form bound `ceil(ln(epsilon / |p0 - p_inf|) / ln|eta|)` for
/// diagonal initial states.
pub fn runtime_analytic(
    initial: &QubitState,
    params: &ModelParams,
    q: &RuntimeQuery,
) -> Result<usize> {
    q.validate()?;
    if initial.c().norm() > 0.0 {
        return Err(Error::DiagonalOnly {
            coherence: initial.c().norm(),
        });
    }
    let eta = analytics::eta_exact(params)?;
    if eta.abs() >= 1.0 {
        return Err(Error::NoSteadyState {
            gap: (1.0 - eta).abs(),
        });
    }
    let p_inf = analytics::p_infinity(params)?;
    runtime_bound(eta, (initial.p() - p_inf).abs(), q.epsilon)
}

/// The bound itself, from `eta` and the initial population gap.
pub fn runtime_bound(eta: f64, gap: f64, epsilon: f64) -> Result<usize> {
    if eta.abs() >= 1.0 {
        return Err(Error::NoSteadyState {
            gap: (1.0 - eta).abs(),
        });
    }
    if epsilon >= gap {
        return Ok(0);
    }
    if eta == 0.0 {
        return Ok(1);
    }
    Ok(((epsilon / gap).ln() / eta.abs().ln()).ceil() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmath::{trace_distance, validate_state, DensityMatrix, TOLERANCES};
    use std::f64::consts::PI;

    fn cplx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_duration_is_identity() {
        // tau must be positive for a valid model, so go through the exponential directly
        let h = build_hamiltonians(&ModelParams::new(1.0, 2.0, 0.3, 0.4, 0.5, 1.0, 1.0)).h_tot;
        let u = hermitian_expm(&h, 0.0).unwrap();
        assert!((&u - &ComplexMatrix::identity(8)).max_abs() < 1e-13);
    }

    #[test]
    fn uncoupled_collision_is_diagonal_phase() {
        let u = collision_unitary(&ModelParams::new(1.3, 0.7, 0.0, 0.0, 0.0, 1.0, 2.0)).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                if i != j {
                    assert!(u[(i, j)].norm() < 1e-14);
                }
            }
            assert!((u[(i, i)].norm() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn unitarity_for_assorted_params() {
        for (k, tau) in [0.01, 0.7, 3.0, 19.0].into_iter().enumerate() {
            let kf = k as f64;
            let p = ModelParams::new(0.2 + kf, 4.0 - kf, 0.3 * kf, 5.0 - kf, 1.1 * kf, 1.0, tau);
            assert!(collision_unitary(&p).unwrap().unitarity_deviation() < TOLERANCES.unitarity);
        }
    }

    #[test]
    fn free_evolution_keeps_populations_and_rotates_phase() {
        let p = ModelParams::new(1.3, 0.7, 0.0, 0.0, 0.0, 1.0, 2.0);
        let u = collision_unitary(&p).unwrap();
        let s = QubitState::new(0.3, cplx(0.2, -0.1)).unwrap();
        let out = ri_step(&s, &p, &u).unwrap();
        assert!((out.p() - 0.3).abs() < 1e-14);
        assert!((out.c().norm() - s.c().norm()).abs() < 1e-14);
        // c picks up exp(i omega_s tau)
        assert!((out.c() - s.c() * Complex64::from_polar(1.0, 1.3 * 2.0)).norm() < 1e-14);
    }

    #[test]
    fn diagonal_states_stay_diagonal() {
        for p in [
            ModelParams::new(1.0, 2.0, 2.0, 1.0, 0.5, 1.0, 0.1),
            ModelParams::new(0.3, 0.3, 4.0, 0.0, 3.0, 0.2, 7.0).with_betas(0.2, 5.0),
        ] {
            let u = collision_unitary(&p).unwrap();
            let out = ri_step(&QubitState::diagonal(0.8).unwrap(), &p, &u).unwrap();
            assert!(out.c().norm() < 1e-13);
        }
    }

    #[test]
    fn one_step_from_ground_matches_eta0() {
        let p = ModelParams::resonant(1.0, 1.0, 0.0, 1.0, PI / 8.0);
        let u = collision_unitary(&p).unwrap();
        let out = ri_step(&QubitState::diagonal(1.0).unwrap(), &p, &u).unwrap();
        let p_a = p.p_a1();
        assert!((out.p() - (p_a + 0.5 * (1.0 - p_a))).abs() < 1e-12);
        assert!((analytics::eta0(&p).value - 0.5).abs() < 1e-15);
    }

    #[test]
    fn cached_channel_matches_literal_map() {
        let p = ModelParams::new(0.9, 1.6, 1.2, 0.4, 0.8, 0.7, 2.3).with_betas(0.7, 2.0);
        let col = Collision::new(&p).unwrap();
        let s = QubitState::new(0.35, cplx(-0.2, 0.3)).unwrap();
        let a = col.step(&s).unwrap();
        let b = col.step_literal(&s).unwrap();
        let c = ri_step(&s, &p, col.unitary()).unwrap();
        assert!(qubit_distance(&a, &b) < 1e-14 && qubit_distance(&b, &c) < 1e-15);
    }

    #[test]
    fn qubit_distance_is_trace_distance() {
        let a = QubitState::new(0.3, cplx(0.1, 0.2)).unwrap();
        let b = QubitState::new(0.6, cplx(-0.2, 0.05)).unwrap();
        let full = trace_distance(&a.to_density_matrix(), &b.to_density_matrix()).unwrap();
        assert!((qubit_distance(&a, &b) - full).abs() < 1e-15);
    }

    #[test]
    fn evolve_shapes() {
        let p = ModelParams::resonant(1.0, 1.0, 0.3, 1.0, 0.5);
        let s = QubitState::new(0.2, cplx(0.1, 0.1)).unwrap();
        let t = evolve(&s, &p, 0).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.records[0].state(), s);
        let t = evolve(&s, &p, 25).unwrap();
        assert_eq!(t.len(), 26);
        for (k, r) in t.records.iter().enumerate() {
            assert_eq!(r.n, k);
            validate_state(&r.state().to_matrix()).unwrap();
        }
    }

    #[test]
    fn strong_dephasing_slows_relaxation() {
        let p = ModelParams::resonant(1.0, 1.0, 5.0, 1.0, 10.0);
        let t = evolve(&QubitState::diagonal(0.0).unwrap(), &p, 40).unwrap();
        let gap = |r: &TrajectoryRecord| (r.p - p.p_a1()).abs();
        // eta = 0.97449 here: more than a third of the gap survives 40 collisions
        assert!(gap(t.last()) > 0.3 * gap(&t.records[0]));
        let eta = analytics::eta_exact(&p).unwrap();
        assert!((eta - 0.97449).abs() < 1e-5, "{eta}");
    }

    #[test]
    fn numeric_fixed_point_matches_closed_form() {
        let p = ModelParams::new(1.0, 1.5, 1.7, 0.6, 0.9, 0.8, 1.3);
        let col = Collision::new(&p).unwrap();
        assert!((col.numeric_eta() - analytics::eta_exact(&p).unwrap()).abs() < 1e-12);
        assert!(
            (col.numeric_p_infinity().unwrap() - analytics::p_infinity(&p).unwrap()).abs() < 1e-12
        );
    }

    #[test]
    fn runtime_examples() {
        assert_eq!(runtime_bound(0.5, 0.23, 1e-6).unwrap(), 18);
        assert_eq!(runtime_bound(0.5, 0.23, 0.3).unwrap(), 0);
        assert_eq!(runtime_bound(0.0, 0.23, 1e-6).unwrap(), 1);
        assert!(matches!(
            runtime_bound(1.0, 0.2, 1e-6),
            Err(Error::NoSteadyState { .. })
        ));

        let p = ModelParams::resonant(1.0, 1.0, 0.0, 1.0, 10.0);
        let q = RuntimeQuery::new(1e-6, 10_000).unwrap();
        let coherent = QubitState::new(0.5, cplx(0.1, 0.0)).unwrap();
        assert!(matches!(
            runtime_analytic(&coherent, &p, &q),
            Err(Error::DiagonalOnly { .. })
        ));
        let at_target = QubitState::diagonal(p.p_a1()).unwrap();
        assert_eq!(runtime_simulated(&at_target, &p, &q).unwrap(), 0);
        assert_eq!(runtime_analytic(&at_target, &p, &q).unwrap(), 0);
        assert!(RuntimeQuery::new(0.0, 10).is_err());
    }

    #[test]
    fn runtime_simulated_agrees_with_bound() {
        let q = RuntimeQuery::new(1e-6, 1_000_000).unwrap();
        let start = QubitState::maximally_mixed();
        for jz in [0.0, 0.4, 1.3, 2.7] {
            let p = ModelParams::resonant(1.0, 1.0, jz, 1.0, 10.0);
            let sim = runtime_simulated(&start, &p, &q).unwrap() as i64;
            let an = runtime_analytic(&start, &p, &q).unwrap() as i64;
            assert!((sim - an).abs() <= 1, "jzz {jz}: {sim} vs {an}");
        }
    }

    #[test]
    fn frozen_point_has_no_runtime() {
        // tau sqrt(4 J^2 + J_zz^2) = pi on resonance gives eta = 1
        let jz = 1.0;
        let tau = PI / 5f64.sqrt();
        let p = ModelParams::resonant(1.0, 1.0, jz, 1.0, tau);
        let q = RuntimeQuery::new(1e-6, 1000).unwrap();
        let r = runtime_simulated(&QubitState::diagonal(0.0).unwrap(), &p, &q);
        assert!(
            matches!(
                r,
                Err(Error::NoSteadyState { .. }) | Err(Error::NotConverged { .. })
            ),
            "{r:?}"
        );
    }

    #[test]
    fn unequal_temperatures_use_numeric_fixed_point() {
        let p = ModelParams::new(1.0, 1.0, 1.0, 0.7, 0.5, 1.0, 1.5).with_betas(0.5, 3.0);
        let q = RuntimeQuery::new(1e-8, 100_000).unwrap();
        let (fixed, _) = steady_state(&QubitState::maximally_mixed(), &p, &q).unwrap();
        let col = Collision::new(&p).unwrap();
        assert!((fixed.p() - col.numeric_p_infinity().unwrap()).abs() < 1e-8);
        let n = runtime_simulated(&QubitState::maximally_mixed(), &p, &q).unwrap();
        assert!(n > 0);
    }

    #[test]
    fn density_matrix_round_trip_through_literal_step() {
        let p = ModelParams::new(2.0, 1.0, 0.5, 1.5, 2.5, 0.3, 4.0);
        let col = Collision::new(&p).unwrap();
        let s = QubitState::new(0.9, cplx(0.2, 0.1)).unwrap();
        let out = col.step_literal(&s).unwrap();
        DensityMatrix::new(out.to_matrix()).unwrap();
    }
}
