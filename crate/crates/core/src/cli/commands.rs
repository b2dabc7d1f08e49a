use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::config::{ConfigError, RunConfig};
use super::{Cell, CliError, Table};
use crate::analytics;
use crate::engine::{self, Collision, RuntimeQuery};
use crate::error::Error;
use crate::model::{ModelParams, QubitState};
use crate::thermo;

/// Scalar a sweep can report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Eta,
    Eta0,
    PInf,
    Psi2,
    Psi20,
    Psi2Tilde,
    Q1,
    Q2,
    W1,
    W2,
    NStarSim,
    NStarAn,
}

impl Quantity {
    pub const ALL: [Quantity; 12] = [
        Quantity::Eta,
        Quantity::Eta0,
        Quantity::PInf,
        Quantity::Psi2,
        Quantity::Psi20,
        Quantity::Psi2Tilde,
        Quantity::Q1,
        Quantity::Q2,
        Quantity::W1,
        Quantity::W2,
        Quantity::NStarSim,
        Quantity::NStarAn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::Eta => "eta",
            Quantity::Eta0 => "eta0",
            Quantity::PInf => "p_inf",
            Quantity::Psi2 => "psi2",
            Quantity::Psi20 => "psi2_0",
            Quantity::Psi2Tilde => "psi2_tilde",
            Quantity::Q1 => "q1",
            Quantity::Q2 => "q2",
            Quantity::W1 => "w1",
            Quantity::W2 => "w2",
            Quantity::NStarSim => "n_star_sim",
            Quantity::NStarAn => "n_star_an",
        }
    }

    /// Value at `params`, with `NaN` where the quantity is undefined.
    ///
    /// Coherence factors use the phase of the configured initial coherence
    /// (zero if there is none). Heat and work are per collision at the
    /// steady state. Runtimes start from the configured initial state.
    pub fn evaluate(self, cfg: &RunConfig, params: &ModelParams) -> Result<f64, CliError> {
        let chi = cfg.initial.chi().unwrap_or(0.0);
        let no_zz = params.with_j_zz(0.0);
        let query = || RuntimeQuery::new(cfg.epsilon, cfg.max_steps);
        let value = match self {
            Quantity::Eta => analytics::eta_exact(params),
            Quantity::Eta0 => analytics::eta_exact(&no_zz),
            Quantity::PInf => analytics::p_infinity(params),
            Quantity::Psi2 => analytics::psi_exact(params, chi).map(|z| z.norm_sqr()),
            Quantity::Psi20 => analytics::psi_exact(&no_zz, chi).map(|z| z.norm_sqr()),
            Quantity::Psi2Tilde => Ok(analytics::psi_tilde_heisenberg(params, chi).norm_sqr()),
            Quantity::Q1 | Quantity::Q2 | Quantity::W1 | Quantity::W2 => steady_energetics(params)
                .map(|e| match self {
                    Quantity::Q1 => e.q1,
                    Quantity::Q2 => e.q2,
                    Quantity::W1 => e.w1,
                    _ => e.w2,
                }),
            Quantity::NStarSim => query()
                .and_then(|q| engine::runtime_simulated(&cfg.initial, params, &q))
                .map(|n| n as f64),
            Quantity::NStarAn => query()
                .and_then(|q| engine::runtime_analytic(&cfg.initial, params, &q))
                .map(|n| n as f64),
        };
        undefined_as_nan(value)
    }
}

fn steady_energetics(params: &ModelParams) -> crate::Result<thermo::StepEnergetics> {
    let collision = Collision::new(params)?;
    let steady = QubitState::diagonal(collision.target_population()?.clamp(0.0, 1.0))?;
    thermo::energetics_with(&collision, &steady)
}

/// Domain gaps become `NaN`; anything that signals a bug or bad input propagates.
fn undefined_as_nan(value: crate::Result<f64>) -> Result<f64, CliError> {
    match value {
        Ok(v) => Ok(v),
        Err(
            Error::UnequalTemperatures { .. }
            | Error::NoSteadyState { .. }
            | Error::DiagonalOnly { .. }
            | Error::DomainViolation(_)
            | Error::DivisionByZero(_)
            | Error::NotConverged { .. },
        ) => Ok(f64::NAN),
        Err(e) => Err(e.into()),
    }
}

impl FromStr for Quantity {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| ConfigError::ValidationError(format!("unknown quantity '{s}'")))
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Columns `n, p, c_re, c_im, distance_to_target` for `cfg.steps` collisions.
pub fn dynamics(cfg: &RunConfig) -> Result<Table, CliError> {
    let traj = engine::evolve(&cfg.initial, &cfg.params, cfg.steps)?;
    let mut table = Table::new(["n", "p", "c_re", "c_im", "distance_to_target"]);
    for r in &traj.records {
        QubitState::new(r.p, r.c)?;
        table.rows.push(vec![
            Cell::Int(r.n),
            Cell::Float(r.p),
            Cell::Float(r.c.re),
            Cell::Float(r.c.im),
            Cell::Float(r.distance_to_target),
        ]);
    }
    Ok(table)
}

/// Per-collision energy ledger along the trajectory: row `n` covers the
/// collision taking state `n` to state `n + 1`.
pub fn thermo(cfg: &RunConfig) -> Result<Table, CliError> {
    let collision = Collision::new(&cfg.params)?;
    let mut table = Table::new([
        "n",
        "p",
        "c_re",
        "c_im",
        "delta_e_s",
        "q1",
        "q2",
        "w1",
        "w2",
        "balance",
    ]);
    let mut state = cfg.initial;
    for n in 0..cfg.steps {
        let e = thermo::energetics_with(&collision, &state)?;
        table.rows.push(vec![
            Cell::Int(n),
            Cell::Float(state.p()),
            Cell::Float(state.c().re),
            Cell::Float(state.c().im),
            Cell::Float(e.delta_e_s),
            Cell::Float(e.q1),
            Cell::Float(e.q2),
            Cell::Float(e.w1),
            Cell::Float(e.w2),
            Cell::Float(e.balance()),
        ]);
        state = collision.step(&state)?;
    }
    Ok(table)
}

type Grid = (&'static str, Vec<(f64, ModelParams)>);

fn sweep_grid(cfg: &RunConfig) -> Result<Grid, CliError> {
    let spec = cfg
        .sweep
        .ok_or_else(|| CliError::Usage("no sweep given (vary/from/to/points)".into()))?;
    let grid = spec
        .values()
        .into_iter()
        .map(|v| (v, spec.variable.apply(&cfg.params, v)))
        .collect();
    Ok((spec.variable.name(), grid))
}

/// One row per grid point, one column per quantity. Points are evaluated in
/// parallel and gathered in grid order.
pub fn sweep(
    cfg: &RunConfig,
    quantities: &[Quantity],
    pool: &rayon::ThreadPool,
) -> Result<Table, CliError> {
    if quantities.is_empty() {
        return Err(CliError::Usage("no quantity requested".into()));
    }
    let (name, grid) = sweep_grid(cfg)?;
    for (_, p) in &grid {
        p.validate()?;
    }
    let rows: Vec<Vec<Cell>> = pool.install(|| {
        grid.par_iter()
            .map(|(v, p)| {
                let mut row = vec![Cell::Float(*v)];
                for q in quantities {
                    let value = q.evaluate(cfg, p)?;
                    row.push(match q {
                        Quantity::NStarSim | Quantity::NStarAn => count_cell(value),
                        _ => Cell::Float(value),
                    });
                }
                Ok(row)
            })
            .collect::<Result<_, CliError>>()
    })?;
    let mut table = Table::new(std::iter::once(name).chain(quantities.iter().map(|q| q.name())));
    table.rows = rows;
    Ok(table)
}

/// Simulated and closed-form runtimes over the sweep grid, or at the single
/// configured point when there is no sweep.
pub fn runtime(cfg: &RunConfig, pool: &rayon::ThreadPool) -> Result<Table, CliError> {
    let (name, grid) = match cfg.sweep {
        Some(_) => sweep_grid(cfg)?,
        None => ("tau", vec![(cfg.params.tau, cfg.params)]),
    };
    let rows: Vec<Vec<Cell>> = pool.install(|| {
        grid.par_iter()
            .map(|(v, p)| {
                let sim = Quantity::NStarSim.evaluate(cfg, p)?;
                let an = Quantity::NStarAn.evaluate(cfg, p)?;
                Ok(vec![Cell::Float(*v), count_cell(sim), count_cell(an)])
            })
            .collect::<Result<_, CliError>>()
    })?;
    let mut table = Table::new([name, "n_sim", "n_an"]);
    table.rows = rows;
    Ok(table)
}

fn count_cell(x: f64) -> Cell {
    if x.is_finite() {
        Cell::Int(x as usize)
    } else {
        Cell::Float(x)
    }
}
