//! Exact simulation and closed-form analysis of a qubit undergoing repeated
//! collisions with two thermal ancillas: one coupled through `XX + YY`
//! (dissipative) and one through `ZZ` (dephasing).
//!
//! The crate is organized bottom-up:
//!
//! - [`qmath`]: small dense complex linear algebra (Kronecker products,
//!   Hermitian exponential, partial trace, trace distance)
//! - [`model`]: parameters, qubit states, Hamiltonians and energy scales
//! - [`engine`]: the collision map, trajectories and thermalization runtimes
//! - [`analytics`]: closed forms for the population and coherence maps and
//!   their limiting regimes
//! - [`thermo`]: heat and work exchanged per collision
//! - [`cli`]: config parsing, sweeps, CSV output and the oracle suite
//!
//! ```
//! use ri_collide::{analytics, engine, model::{ModelParams, QubitState}};
//!
//! let params = ModelParams::resonant(1.0, 1.0, 0.4, 1.0, 10.0);
//! let eta = analytics::eta_exact(&params).unwrap();
//! let traj = engine::evolve(&QubitState::maximally_mixed(), &params, 3).unwrap();
//! let p_inf = analytics::p_infinity(&params).unwrap();
//! let gap = |k: usize| traj.records[k].p - p_inf;
//! assert!((gap(1) - eta * gap(0)).abs() < 1e-12);
//! ```

pub mod analytics;
pub mod cli;
pub mod engine;
pub mod error;
pub mod model;
pub mod qmath;
pub mod thermo;

pub use error::{Error, Result};
pub use model::{ModelParams, QubitState};
