use thiserror::Error;

/// Everything that can go wrong inside the simulator and the analytics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("operator is not Hermitian (max |H - H^dagger| = {deviation:e})")]
    NonHermitianInput { deviation: f64 },

    #[error("a {dim}x{dim} matrix does not factor into the S (x) A1 (x) A2 qubit ordering")]
    BadFactorization { dim: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix data has {len} entries, expected {rows}x{cols}")]
    BadShape {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("invalid model parameters: {0}")]
    InvalidParams(String),

    #[error("closed forms need equal bath temperatures (beta1 = {beta1}, beta2 = {beta2})")]
    UnequalTemperatures { beta1: f64, beta2: f64 },

    #[error("no steady state: population dynamics is frozen (|1 - eta| = {gap:e})")]
    NoSteadyState { gap: f64 },

    #[error(
        "closed-form runtime bound only applies to diagonal initial states (|c| = {coherence:e})"
    )]
    DiagonalOnly { coherence: f64 },

    #[error("formula used outside its domain: {0}")]
    DomainViolation(&'static str),

    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),

    #[error("energy ledger violated: {what} residual {residual:e}")]
    LedgerViolation { what: &'static str, residual: f64 },

    #[error("did not reach the target within {max_steps} steps")]
    NotConverged { max_steps: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
