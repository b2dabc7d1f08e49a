//! Command implementations behind the `ri-collide` binary.
//!
//! Each command turns a [`RunConfig`] into a [`Table`] that is written as CSV:
//! a header row, comma separators, LF line endings and floats printed with 17
//! significant digits so every value round-trips. Undefined values (no steady
//! state, unequal temperatures for a closed form, ...) are written as `NaN`.

mod commands;
mod config;
mod verify;

use std::io::Write;

use thiserror::Error;

pub use commands::{dynamics, runtime, sweep, thermo, Quantity};
pub use config::{parse_config, ConfigError, RunConfig, SweepSpec, SweepVariable};
pub use verify::{draw_params, draw_state, trial_rng, verify, Failure, VerifyReport};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "RI_COLLIDE_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Model(#[from] crate::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(usize),
    Float(f64),
}

impl Cell {
    fn render(&self) -> String {
        match *self {
            Cell::Int(n) => n.to_string(),
            Cell::Float(x) => format_float(x),
        }
    }

    pub fn as_f64(&self) -> f64 {
        match *self {
            Cell::Int(n) => n as f64,
            Cell::Float(x) => x,
        }
    }
}

/// 17 significant digits; `NaN`, `inf` and `-inf` for non-finite values.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        "NaN".into()
    } else if x.is_infinite() {
        if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        }
    } else {
        format!("{x:.16e}")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[k].as_f64()).collect())
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), CliError> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String, CliError> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is ASCII"))
    }
}

/// Rayon pool sized by [`THREADS_ENV`] when set, else rayon's default.
pub fn worker_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
            CliError::Usage(format!(
                "{THREADS_ENV} must be a positive integer, got '{raw}'"
            ))
        })?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| CliError::Usage(e.to_string()))
}
