//! `key = value` run configuration.
//!
//! ```text
//! # resonant, energy-conserving couplings
//! omega = 1          # sets omega_s and omega_a together
//! jxx = 1
//! jyy = 1
//! jzz = 0.4
//! beta = 1
//! tau = 10
//! ```
//!
//! Required: `tau`, the splittings (`omega_s` and `omega_a`, or `omega`) and
//! the temperature (`beta`, or both `beta1` and `beta2`). Couplings default to
//! zero, the initial state to the maximally mixed one.

use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_complex::Complex64;
use thiserror::Error;

use crate::model::{ModelParams, QubitState};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    ParseError { line: usize, message: String },
    #[error("invalid config: {0}")]
    ValidationError(String),
}

fn invalid(msg: impl Into<String>) -> ConfigError {
    ConfigError::ValidationError(msg.into())
}

/// Parameter a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVariable {
    Jzz,
    Tau,
    Beta,
    Jxx,
    Jyy,
}

impl SweepVariable {
    pub fn name(self) -> &'static str {
        match self {
            SweepVariable::Jzz => "jzz",
            SweepVariable::Tau => "tau",
            SweepVariable::Beta => "beta",
            SweepVariable::Jxx => "jxx",
            SweepVariable::Jyy => "jyy",
        }
    }

    /// `params` with this variable set to `value` (both temperatures for `beta`).
    pub fn apply(self, params: &ModelParams, value: f64) -> ModelParams {
        let mut p = *params;
        match self {
            SweepVariable::Jzz => p.j_zz = value,
            SweepVariable::Tau => p.tau = value,
            SweepVariable::Beta => {
                p.beta1 = value;
                p.beta2 = value;
            }
            SweepVariable::Jxx => p.j_xx = value,
            SweepVariable::Jyy => p.j_yy = value,
        }
        p
    }
}

impl FromStr for SweepVariable {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "jzz" => Ok(SweepVariable::Jzz),
            "tau" => Ok(SweepVariable::Tau),
            "beta" => Ok(SweepVariable::Beta),
            "jxx" => Ok(SweepVariable::Jxx),
            "jyy" => Ok(SweepVariable::Jyy),
            other => Err(invalid(format!(
                "cannot sweep '{other}' (expected jzz, tau, beta, jxx or jyy)"
            ))),
        }
    }
}

impl fmt::Display for SweepVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evenly spaced grid `from..=to` with `points` entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub variable: SweepVariable,
    pub from: f64,
    pub to: f64,
    pub points: usize,
}

impl SweepSpec {
    pub fn new(
        variable: SweepVariable,
        from: f64,
        to: f64,
        points: usize,
    ) -> Result<Self, ConfigError> {
        if points < 2 {
            return Err(invalid(format!(
                "sweep needs at least 2 points, got {points}"
            )));
        }
        if !from.is_finite() || !to.is_finite() {
            return Err(invalid("sweep bounds must be finite"));
        }
        Ok(Self {
            variable,
            from,
            to,
            points,
        })
    }

    pub fn values(&self) -> Vec<f64> {
        let last = (self.points - 1) as f64;
        (0..self.points)
            .map(|k| self.from + (self.to - self.from) * k as f64 / last)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: ModelParams,
    pub initial: QubitState,
    pub steps: usize,
    pub epsilon: f64,
    pub max_steps: usize,
    pub sweep: Option<SweepSpec>,
    pub output: Option<PathBuf>,
}

const KEYS: &[&str] = &[
    "omega_s",
    "omega_a",
    "omega",
    "jxx",
    "jyy",
    "jzz",
    "beta",
    "beta1",
    "beta2",
    "tau",
    "p0",
    "c0_re",
    "c0_im",
    "steps",
    "epsilon",
    "max_steps",
    "vary",
    "from",
    "to",
    "points",
    "output",
];

struct Entries {
    raw: HashMap<&'static str, (usize, String)>,
}

impl Entries {
    fn text(&self, key: &str) -> Option<&str> {
        self.raw.get(key).map(|(_, v)| v.as_str())
    }

    fn parse<T: FromStr>(&self, key: &str) -> Result<Option<T>, ConfigError>
    where
        T::Err: fmt::Display,
    {
        match self.raw.get(key) {
            None => Ok(None),
            Some((line, v)) => v
                .parse::<T>()
                .map(Some)
                .map_err(|e| ConfigError::ParseError {
                    line: *line,
                    message: format!("{key}: cannot parse '{v}': {e}"),
                }),
        }
    }

    fn has(&self, key: &str) -> bool {
        self.raw.contains_key(key)
    }
}

fn tokenize(text: &str) -> Result<Entries, ConfigError> {
    let mut raw = HashMap::new();
    for (idx, full) in text.lines().enumerate() {
        let line = idx + 1;
        let body = full.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (key, value) = body
            .split_once('=')
            .ok_or_else(|| ConfigError::ParseError {
                line,
                message: format!("expected 'key = value', got '{body}'"),
            })?;
        let key = key.trim();
        let value = value.trim();
        let known = KEYS
            .iter()
            .find(|k| **k == key)
            .ok_or_else(|| ConfigError::ParseError {
                line,
                message: format!("unknown key '{key}'"),
            })?;
        if value.is_empty() {
            return Err(ConfigError::ParseError {
                line,
                message: format!("{key}: missing value"),
            });
        }
        if raw.insert(*known, (line, value.to_string())).is_some() {
            return Err(ConfigError::ParseError {
                line,
                message: format!("duplicate key '{key}'"),
            });
        }
    }
    Ok(Entries { raw })
}

/// Parses and validates a run configuration.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let e = tokenize(text)?;
    // report malformed numbers by line before any cross-key validation
    for key in KEYS {
        match *key {
            "vary" | "output" => {}
            "steps" | "points" | "max_steps" => {
                e.parse::<usize>(key)?;
            }
            _ => {
                e.parse::<f64>(key)?;
            }
        }
    }

    let omega: Option<f64> = e.parse("omega")?;
    let (omega_s, omega_a) = match (
        omega,
        e.parse::<f64>("omega_s")?,
        e.parse::<f64>("omega_a")?,
    ) {
        (Some(_), Some(_), _) | (Some(_), _, Some(_)) => {
            return Err(invalid("give either omega or omega_s/omega_a, not both"));
        }
        (Some(w), None, None) => (w, w),
        (None, Some(ws), Some(wa)) => (ws, wa),
        _ => {
            return Err(invalid(
                "missing energy splittings (omega_s and omega_a, or omega)",
            ))
        }
    };

    let (beta1, beta2) = match (
        e.parse::<f64>("beta")?,
        e.parse::<f64>("beta1")?,
        e.parse::<f64>("beta2")?,
    ) {
        (Some(_), Some(_), _) | (Some(_), _, Some(_)) => {
            return Err(invalid("give either beta or beta1/beta2, not both"));
        }
        (Some(b), None, None) => (b, b),
        (None, Some(b1), Some(b2)) => (b1, b2),
        (None, Some(_), None) | (None, None, Some(_)) => {
            return Err(invalid("beta1 and beta2 must be given together"))
        }
        (None, None, None) => {
            return Err(invalid(
                "missing inverse temperature (beta, or beta1 and beta2)",
            ))
        }
    };

    let tau: f64 = e.parse("tau")?.ok_or_else(|| invalid("missing tau"))?;
    let params = ModelParams {
        omega_s,
        omega_a,
        j_xx: e.parse("jxx")?.unwrap_or(0.0),
        j_yy: e.parse("jyy")?.unwrap_or(0.0),
        j_zz: e.parse("jzz")?.unwrap_or(0.0),
        beta1,
        beta2,
        tau,
    };
    params.validate().map_err(|err| invalid(err.to_string()))?;

    let p0: f64 = e.parse("p0")?.unwrap_or(0.5);
    let c0 = Complex64::new(
        e.parse("c0_re")?.unwrap_or(0.0),
        e.parse("c0_im")?.unwrap_or(0.0),
    );
    let initial =
        QubitState::new(p0, c0).map_err(|err| invalid(format!("initial state: {err}")))?;

    let epsilon: f64 = e.parse("epsilon")?.unwrap_or(1e-6);
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(invalid(format!("epsilon must be > 0, got {epsilon}")));
    }
    let max_steps: usize = e.parse("max_steps")?.unwrap_or(1_000_000);
    if max_steps == 0 {
        return Err(invalid("max_steps must be positive"));
    }

    let sweep_keys = ["vary", "from", "to", "points"];
    let sweep = if sweep_keys.iter().any(|k| e.has(k)) {
        if let Some(missing) = sweep_keys.iter().find(|k| !e.has(k)) {
            return Err(invalid(format!("sweep is missing '{missing}'")));
        }
        Some(SweepSpec::new(
            e.text("vary").unwrap_or_default().parse()?,
            e.parse("from")?.unwrap_or_default(),
            e.parse("to")?.unwrap_or_default(),
            e.parse("points")?.unwrap_or_default(),
        )?)
    } else {
        None
    };

    Ok(RunConfig {
        params,
        initial,
        steps: e.parse("steps")?.unwrap_or(100),
        epsilon,
        max_steps,
        sweep,
        output: e.text("output").map(PathBuf::from),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const RESONANT: &str =
        "# energy conserving, resonant\njxx = 1\njyy = 1\nomega = 1\nbeta = 1\ntau = 10\n";

    #[test]
    fn resonant_config() {
        let cfg = parse_config(RESONANT).unwrap();
        assert!((cfg.params.p_a1() - 0.731).abs() < 1e-3);
        assert_eq!(cfg.params.omega_s, 1.0);
        assert_eq!(cfg.params.j_zz, 0.0);
        assert_eq!(cfg.initial, QubitState::maximally_mixed());
        assert_eq!(cfg.sweep, None);
    }

    #[test]
    fn missing_tau() {
        let err = parse_config("omega = 1\nbeta = 1\n").unwrap_err();
        assert_eq!(err, ConfigError::ValidationError("missing tau".into()));
    }

    #[test]
    fn coherence_outside_bloch_ball() {
        let err = parse_config(&format!("{RESONANT}p0 = 0.9\nc0_re = 0.4\n")).unwrap_err();
        assert!(matches!(err, ConfigError::ValidationError(_)));
    }

    #[test]
    fn unknown_key_reports_line() {
        let err = parse_config("omega = 1\n\n# comment\ngamma = 2\n").unwrap_err();
        assert!(
            matches!(err, ConfigError::ParseError { line: 4, .. }),
            "{err}"
        );
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(
            parse_config("omega 1"),
            Err(ConfigError::ParseError { line: 1, .. })
        ));
        assert!(matches!(
            parse_config("tau = ten"),
            Err(ConfigError::ParseError { line: 1, .. })
        ));
        assert!(matches!(
            parse_config("tau = 1\ntau = 2"),
            Err(ConfigError::ParseError { line: 2, .. })
        ));
        assert!(matches!(
            parse_config("tau ="),
            Err(ConfigError::ParseError { line: 1, .. })
        ));
    }

    #[test]
    fn temperature_forms() {
        let cfg = parse_config("omega = 1\nbeta1 = 0.5\nbeta2 = 3\ntau = 1").unwrap();
        assert_eq!((cfg.params.beta1, cfg.params.beta2), (0.5, 3.0));
        assert!(parse_config("omega = 1\nbeta1 = 0.5\ntau = 1").is_err());
        assert!(parse_config("omega = 1\nbeta = 1\nbeta1 = 0.5\nbeta2 = 1\ntau = 1").is_err());
        assert!(parse_config("omega = 1\nbeta = -1\ntau = 1").is_err());
    }

    #[test]
    fn sweep_block() {
        let cfg = parse_config(&format!(
            "{RESONANT}vary = jzz\nfrom = 0\nto = 5\npoints = 101\n"
        ))
        .unwrap();
        let s = cfg.sweep.unwrap();
        assert_eq!(s.variable, SweepVariable::Jzz);
        let v = s.values();
        assert_eq!(v.len(), 101);
        assert_eq!((v[0], v[100]), (0.0, 5.0));
        assert!((v[8] - 0.4).abs() < 1e-15);
        assert!(parse_config(&format!(
            "{RESONANT}vary = jzz\nfrom = 0\nto = 5\npoints = 1\n"
        ))
        .is_err());
        assert!(parse_config(&format!(
            "{RESONANT}vary = omega\nfrom = 0\nto = 5\npoints = 3\n"
        ))
        .is_err());
        assert!(parse_config(&format!("{RESONANT}vary = jzz\n")).is_err());
    }

    #[test]
    fn sweep_variable_sets_both_temperatures() {
        let p = ModelParams::new(1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0).with_betas(1.0, 2.0);
        let q = SweepVariable::Beta.apply(&p, 4.0);
        assert_eq!((q.beta1, q.beta2), (4.0, 4.0));
    }
}
