//! Closed-form coefficients of the collision map and their limiting regimes.
//!
//! One collision acts on the system qubit as
//!
//! ```text
//! p'  = p_inf + eta * (p - p_inf)
//! c'  = A * c^* + B * c          (psi = A e^{-i chi} + B e^{i chi}, c' = psi |c|)
//! ```
//!
//! Every `sin(x tau / 2) / x` factor is evaluated through a normalized sinc
//! so that the resonance surfaces `x = 0` (for example `2 J_zz = omega_a +
//! omega_s`, where `kappa` vanishes) are removable rather than `0/0`.
//!
//! Approximate forms never refuse out-of-regime input. They return an
//! [`Approximation`] whose `regime_ratio` is the ratio of the neglected scale
//! to the kept one; small means the approximation is trustworthy.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::{energy_params, validate_for_analytics, ModelParams};

/// Value of an approximate closed form together with a regime-quality hint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Approximation {
    pub value: f64,
    pub regime_ratio: f64,
}

/// `sin(x) / x` with the removable singularity filled in.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// `sin(x tau / 2) / x`, finite at `x = 0` where it equals `tau / 2`.
pub fn half_sin_over(x: f64, tau: f64) -> f64 {
    0.5 * tau * sinc(0.5 * x * tau)
}

fn equal_beta_p_a(params: &ModelParams) -> Result<f64> {
    validate_for_analytics(params)?;
    Ok(params.p_a1())
}

/// The two population-transfer weights `(A', B')` behind both `eta` and `p_inf`:
/// `A' = s_alpha^2 (1-p_A) + s_kappa^2 p_A`, `B' = s_nu^2 (1-p_A) + s_xi^2 p_A`.
fn transfer_weights(params: &ModelParams, p_a: f64) -> (f64, f64) {
    let e = energy_params(params);
    let s = |x: f64| half_sin_over(x, params.tau).powi(2);
    let minus = s(e.alpha) * (1.0 - p_a) + s(e.kappa) * p_a;
    let plus = s(e.nu) * (1.0 - p_a) + s(e.xi) * p_a;
    (minus, plus)
}

/// `1 - eta`, computed without cancellation.
fn eta_deficit(params: &ModelParams, p_a: f64) -> f64 {
    let (minus, plus) = transfer_weights(params, p_a);
    4.0 * (params.j_minus().powi(2) * minus + params.j_plus().powi(2) * plus)
}

/// Exact population relaxation coefficient.
pub fn eta_exact(params: &ModelParams) -> Result<f64> {
    Ok(1.0 - eta_exact_deficit(params)?)
}

/// `1 - eta`, free of the cancellation that `1 - eta_exact` suffers for short collisions.
pub fn eta_exact_deficit(params: &ModelParams) -> Result<f64> {
    let p_a = equal_beta_p_a(params)?;
    Ok(eta_deficit(params, p_a))
}

/// Frozen-dynamics cutoff on `|1 - eta|`.
pub const FROZEN_CUTOFF: f64 = 1e-14;

/// Exact steady-state ground population.
pub fn p_infinity(params: &ModelParams) -> Result<f64> {
    let p_a = equal_beta_p_a(params)?;
    let (minus, plus) = transfer_weights(params, p_a);
    let jm2 = params.j_minus().powi(2);
    let jp2 = params.j_plus().powi(2);
    let denom = jm2 * minus + jp2 * plus;
    if 4.0 * denom < FROZEN_CUTOFF {
        return Err(Error::NoSteadyState { gap: 4.0 * denom });
    }
    Ok((jm2 * (1.0 - p_a) * minus + jp2 * p_a * plus) / denom)
}

/// `eta` for `j_xx = j_yy`, `omega_s = omega_a`.
pub fn eta_ec_resonant(params: &ModelParams) -> Result<f64> {
    if !params.is_energy_conserving_resonant() {
        return Err(Error::DomainViolation(
            "eta_ec_resonant needs j_xx = j_yy and omega_s = omega_a",
        ));
    }
    let j = params.j_xx;
    let omega_r2 = 4.0 * j * j + params.j_zz * params.j_zz;
    if omega_r2 == 0.0 {
        return Ok(1.0);
    }
    Ok(1.0 - 4.0 * j * j / omega_r2 * (params.tau * omega_r2.sqrt()).sin().powi(2))
}

/// `j_zz` dominating every other energy: `1 - (J+^2 + J-^2)/J_zz^2 sin^2(J_zz tau)`.
pub fn eta_large_jzz(params: &ModelParams) -> Result<Approximation> {
    let jz = params.j_zz;
    if jz == 0.0 {
        return Err(Error::DivisionByZero("eta_large_jzz needs j_zz != 0"));
    }
    let value = 1.0
        - (params.j_plus().powi(2) + params.j_minus().powi(2)) / (jz * jz)
            * (jz * params.tau).sin().powi(2);
    Ok(Approximation {
        value,
        regime_ratio: large_jzz_ratio(params),
    })
}

fn large_jzz_ratio(params: &ModelParams) -> f64 {
    let others = [
        params.j_xx.abs(),
        params.j_yy.abs(),
        params.omega_s,
        params.omega_a,
    ];
    others.iter().copied().fold(0.0, f64::max) / params.j_zz.abs()
}

fn largest_scale(params: &ModelParams) -> f64 {
    let e = energy_params(params);
    [e.xi, e.nu, e.kappa, e.alpha]
        .into_iter()
        .fold(0.0, f64::max)
}

/// Fourth-order short-collision expansion of `eta`.
pub fn eta_series_tau4(params: &ModelParams) -> Result<Approximation> {
    let deficit = eta_series_deficit(params)?;
    Ok(Approximation {
        value: 1.0 - deficit.value,
        regime_ratio: deficit.regime_ratio,
    })
}

/// `1 - eta_series_tau4`, evaluated directly.
pub fn eta_series_deficit(params: &ModelParams) -> Result<Approximation> {
    let p_a = equal_beta_p_a(params)?;
    let e = energy_params(params);
    let (jm2, jp2) = (e.j_minus.powi(2), e.j_plus.powi(2));
    let t2 = params.tau * params.tau;
    let quartic = e.alpha.powi(2) * jm2 * (1.0 - p_a)
        + e.nu.powi(2) * jp2 * (1.0 - p_a)
        + e.kappa.powi(2) * jm2 * p_a
        + e.xi.powi(2) * jp2 * p_a;
    let value = 2.0 * (params.j_xx.powi(2) + params.j_yy.powi(2)) * t2 - quartic / 12.0 * t2 * t2;
    Ok(Approximation {
        value,
        regime_ratio: params.tau * largest_scale(params),
    })
}

fn weak_coupling_ratio(params: &ModelParams) -> f64 {
    let omega = 0.5 * (params.omega_s + params.omega_a);
    let neglected = [
        params.j_xx.abs(),
        params.j_yy.abs(),
        params.j_zz.abs(),
        (params.omega_a - params.omega_s).abs(),
    ];
    neglected.into_iter().fold(0.0, f64::max) / omega
}

/// Weak but long collisions: `1 - J+^2 sin^2(tau sqrt(J+^2 + J_zz^2)) / (J+^2 + J_zz^2)`.
pub fn eta_jtau1(params: &ModelParams) -> Approximation {
    let jp2 = params.j_plus().powi(2);
    let r2 = jp2 + params.j_zz.powi(2);
    let value = if r2 == 0.0 {
        1.0
    } else {
        1.0 - jp2 / r2 * (params.tau * r2.sqrt()).sin().powi(2)
    };
    Approximation {
        value,
        regime_ratio: weak_coupling_ratio(params),
    }
}

/// [`eta_jtau1`] with the dephasing bath switched off, `1 - sin^2(J+ tau)`.
pub fn eta0(params: &ModelParams) -> Approximation {
    eta_jtau1(&params.with_j_zz(0.0))
}

/// Weights of the exact coherence map `c' = conj_weight * c^* + direct_weight * c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceMap {
    pub conj_weight: Complex64,
    pub direct_weight: Complex64,
}

impl CoherenceMap {
    /// `psi` for a coherence of phase `chi`.
    pub fn psi(&self, chi: f64) -> Complex64 {
        self.conj_weight * Complex64::from_polar(1.0, -chi)
            + self.direct_weight * Complex64::from_polar(1.0, chi)
    }

    pub fn apply(&self, c: Complex64) -> Complex64 {
        self.conj_weight * c.conj() + self.direct_weight * c
    }
}

pub fn coherence_map(params: &ModelParams) -> Result<CoherenceMap> {
    let p_a = equal_beta_p_a(params)?;
    let e = energy_params(params);
    let tau = params.tau;
    let (ws, wa, jz) = (params.omega_s, params.omega_a, params.j_zz);
    let s = |x: f64| half_sin_over(x, tau);
    let half_cos = |x: f64| (0.5 * x * tau).cos();
    let i = Complex64::i();

    let conj_weight = 4.0
        * (params.j_xx.powi(2) - params.j_yy.powi(2))
        * (s(e.alpha) * s(e.nu) * (1.0 - p_a) + s(e.kappa) * s(e.xi) * p_a);

    let excited_branch = (half_cos(e.alpha) + i * (2.0 * jz + wa + ws) * s(e.alpha))
        * (half_cos(e.nu) + i * (2.0 * jz - wa + ws) * s(e.nu));
    let ground_branch = (half_cos(e.xi) - i * (2.0 * jz + wa - ws) * s(e.xi))
        * (half_cos(e.kappa) - i * (2.0 * jz - wa - ws) * s(e.kappa));
    let direct_weight = excited_branch * (1.0 - p_a) + ground_branch * p_a;

    Ok(CoherenceMap {
        conj_weight: Complex64::new(conj_weight, 0.0),
        direct_weight,
    })
}

/// Exact coherence multiplier `psi(chi)`, with `c' = psi |c|`.
pub fn psi_exact(params: &ModelParams, chi: f64) -> Result<Complex64> {
    Ok(coherence_map(params)?.psi(chi))
}

fn require_ec_resonant(params: &ModelParams, what: &'static str) -> Result<()> {
    if params.is_energy_conserving_resonant() {
        Ok(())
    } else {
        Err(Error::DomainViolation(what))
    }
}

/// `|psi|^2` in the energy-conserving resonant case.
pub fn psi_sq_ec_resonant(params: &ModelParams) -> Result<f64> {
    Ok(1.0 - psi_sq_ec_resonant_deficit(params)?)
}

/// `1 - |psi|^2` in the energy-conserving resonant case, evaluated directly.
pub fn psi_sq_ec_resonant_deficit(params: &ModelParams) -> Result<f64> {
    require_ec_resonant(
        params,
        "psi_sq_ec_resonant needs j_xx = j_yy and omega_s = omega_a",
    )?;
    let p_a = equal_beta_p_a(params)?;
    let (j, jz, tau) = (params.j_xx, params.j_zz, params.tau);
    let nu = 2.0 * (4.0 * j * j + jz * jz).sqrt();
    // 2 J_zz / nu; both vanish together only when every coupling is off
    let ratio = if nu == 0.0 { 0.0 } else { 2.0 * jz / nu };
    let (sn, cn) = (0.5 * nu * tau).sin_cos();
    let pq = p_a * (1.0 - p_a);
    Ok(
        sn * sn - (1.0 - 2.0 * p_a).powi(2) * ratio * ratio * sn * sn
            + 4.0 * pq * (tau * jz).sin().powi(2) * (1.0 - (ratio * ratio + 1.0) * sn * sn)
            + 4.0 * pq * ratio * sn * cn * (2.0 * tau * jz).sin(),
    )
}

/// `|psi_0|^2 = 1 - sin^2(2 J_xy tau)`, the dephasing bath switched off.
pub fn psi_sq_zero_jzz(params: &ModelParams) -> Result<f64> {
    require_ec_resonant(
        params,
        "psi_sq_zero_jzz needs j_xx = j_yy and omega_s = omega_a",
    )?;
    Ok(1.0 - (2.0 * params.j_xx * params.tau).sin().powi(2))
}

/// Strong dephasing: `1 - 4 p_A (1 - p_A) sin^2(2 J_zz tau)`.
pub fn psi_sq_large_jzz(params: &ModelParams) -> Result<Approximation> {
    let p_a = equal_beta_p_a(params)?;
    let value = 1.0 - 4.0 * p_a * (1.0 - p_a) * (2.0 * params.j_zz * params.tau).sin().powi(2);
    let regime_ratio = if params.j_zz == 0.0 {
        f64::INFINITY
    } else {
        large_jzz_ratio(params)
    };
    Ok(Approximation {
        value,
        regime_ratio,
    })
}

/// Fourth-order short-collision expansion of `|psi|^2`.
///
/// The expansion is only fourth-order accurate on resonance; off resonance the
/// detuning enters at `tau^4` and is not captured, so both conditions are
/// required.
pub fn psi_sq_series(params: &ModelParams) -> Result<Approximation> {
    let deficit = psi_sq_series_deficit(params)?;
    Ok(Approximation {
        value: 1.0 - deficit.value,
        regime_ratio: deficit.regime_ratio,
    })
}

/// `1 - psi_sq_series`, evaluated directly.
pub fn psi_sq_series_deficit(params: &ModelParams) -> Result<Approximation> {
    require_ec_resonant(
        params,
        "psi_sq_series needs j_xx = j_yy and omega_s = omega_a",
    )?;
    let p_a = equal_beta_p_a(params)?;
    let (j2, jz2, tau) = (params.j_xx.powi(2), params.j_zz.powi(2), params.tau);
    let pq = p_a * (1.0 - p_a);
    let t2 = tau * tau;
    let t4 = t2 * t2;
    let value = 4.0 * j2 * t2 + 16.0 * jz2 * pq * t2
        - 64.0 / 3.0 * t4 * pq * jz2 * (2.0 * j2 + jz2)
        - 16.0 / 3.0 * j2 * j2 * t4
        - 4.0 / 3.0 * j2 * jz2 * t4;
    Ok(Approximation {
        value,
        regime_ratio: tau * largest_scale(params),
    })
}

/// Weak-long-collision `|psi|^2 = 1 - sin^2(nu tau / 2) [1 - J_zz^2/(J+^2 + J_zz^2) (1 - 2 p_A)^2]`,
/// with `nu ~ 2 sqrt(J+^2 + J_zz^2)`.
pub fn psi_sq_jtau1(params: &ModelParams) -> Result<Approximation> {
    let p_a = equal_beta_p_a(params)?;
    let jz2 = params.j_zz.powi(2);
    let r2 = params.j_plus().powi(2) + jz2;
    let weight = if r2 == 0.0 { 0.0 } else { jz2 / r2 };
    let value =
        1.0 - (params.tau * r2.sqrt()).sin().powi(2) * (1.0 - weight * (1.0 - 2.0 * p_a).powi(2));
    Ok(Approximation {
        value,
        regime_ratio: weak_coupling_ratio(params),
    })
}

/// Energy scales of the single-bath Heisenberg collision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeisenbergEnergyParams {
    pub theta: f64,
    pub phi: f64,
}

pub fn heisenberg_energy_params(params: &ModelParams) -> HeisenbergEnergyParams {
    HeisenbergEnergyParams {
        theta: (2.0 * params.j_plus()).hypot(params.omega_a - params.omega_s),
        phi: (2.0 * params.j_minus()).hypot(params.omega_a + params.omega_s),
    }
}

/// Coherence multiplier when all three couplings act on a single ancilla
/// (`J_xx XX + J_yy YY + J_zz ZZ`, ancilla at `beta1`).
pub fn psi_tilde_heisenberg(params: &ModelParams, chi: f64) -> Complex64 {
    let p_a = params.p_a1();
    let HeisenbergEnergyParams { theta, phi } = heisenberg_energy_params(params);
    let tau = params.tau;
    let i = Complex64::i();
    let (ws, wa) = (params.omega_s, params.omega_a);

    let flip = 4.0
        * (params.j_xx.powi(2) - params.j_yy.powi(2))
        * half_sin_over(theta, tau)
        * half_sin_over(phi, tau);
    let keep = (Complex64::new((0.5 * theta * tau).cos(), 0.0)
        - i * (wa - ws) * half_sin_over(theta, tau))
        * (Complex64::new((0.5 * phi * tau).cos(), 0.0) + i * (wa + ws) * half_sin_over(phi, tau));

    let zz = 2.0 * params.j_zz * tau;
    let e = |angle: f64| Complex64::from_polar(1.0, angle);
    flip * e(-(chi + zz))
        + keep * e(chi + zz)
        + 2.0 * i * p_a * (flip * e(-chi) - keep * e(chi)) * zz.sin()
}

/// Stroboscopic-limit rate constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateConstants {
    pub gamma: f64,
    pub gamma_zz: f64,
    pub omega_rate: f64,
    pub delta: f64,
}

pub fn rate_constants(params: &ModelParams) -> Result<RateConstants> {
    require_ec_resonant(
        params,
        "rate constants need j_xx = j_yy and omega_s = omega_a",
    )?;
    let p_a = equal_beta_p_a(params)?;
    let (j, jz, w, tau) = (params.j_xx, params.j_zz, params.omega_s, params.tau);
    Ok(RateConstants {
        gamma: j * j * tau,
        gamma_zz: jz * jz * tau,
        omega_rate: 0.5 * w * w * tau,
        delta: 2.0 * jz * (jz + w * (1.0 - 2.0 * p_a)) * tau,
    })
}

/// Short-collision equations of motion in the energy-conserving resonant case.
///
/// `dp/dt = -population_rate (p - p_inf)` and
/// `dc/dt = (coherence_generator + coherence_correction) c`, where the
/// correction is the first order in `tau` beyond the Lindblad limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EomCoefficients {
    pub rates: RateConstants,
    pub population_rate: f64,
    pub coherence_generator: Complex64,
    pub coherence_correction: Complex64,
}

impl EomCoefficients {
    pub fn coherence_rate(&self) -> Complex64 {
        self.coherence_generator + self.coherence_correction
    }
}

pub fn eom_coefficients(params: &ModelParams) -> Result<EomCoefficients> {
    let rates = rate_constants(params)?;
    let p_a = params.p_a1();
    let RateConstants {
        gamma,
        gamma_zz,
        omega_rate,
        delta,
    } = rates;
    let (jz, w, tau) = (params.j_zz, params.omega_s, params.tau);
    let bias = 1.0 - 2.0 * p_a;

    let population_rate =
        4.0 * gamma - 16.0 / 3.0 * gamma * gamma * tau - 4.0 / 3.0 * gamma_zz * gamma * tau;
    let coherence_generator =
        Complex64::new(-(2.0 * gamma + delta + omega_rate), 2.0 * jz * bias + w);
    let phase_shift = 8.0 / 3.0 * gamma * jz * bias
        + 4.0 / 3.0 * gamma_zz * bias * jz
        + 2.0 * w * (gamma + gamma_zz)
        + 2.0 * jz * bias * omega_rate
        + w / 3.0 * omega_rate;
    let coherence_correction = Complex64::new(0.0, -phase_shift * tau);
    Ok(EomCoefficients {
        rates,
        population_rate,
        coherence_generator,
        coherence_correction,
    })
}
