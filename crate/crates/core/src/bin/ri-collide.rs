use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ri_collide::cli::{self, CliError, Quantity, RunConfig, SweepSpec, SweepVariable, Table};

/// Repeated-interaction simulator for a qubit between a dissipative and a dephasing bath.
///
/// Config files hold `key = value` lines with `#` comments. Keys: omega_s,
/// omega_a (or omega), jxx, jyy, jzz, beta (or beta1 and beta2), tau, p0,
/// c0_re, c0_im, steps, epsilon, max_steps, vary, from, to, points, output.
/// Set RI_COLLIDE_THREADS to cap the number of worker threads.
#[derive(Parser)]
#[command(name = "ri-collide", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Trajectory of the system qubit.
    ///
    /// CSV columns: n, p, c_re, c_im, distance_to_target.
    Dynamics(Common),
    /// Scalar quantities over a one-parameter grid.
    ///
    /// CSV columns: the swept variable, then one column per quantity.
    /// Quantities: eta, eta0, p_inf, psi2, psi2_0, psi2_tilde, q1, q2, w1, w2,
    /// n_star_sim, n_star_an. Heat and work are taken at the steady state.
    Sweep {
        #[command(flatten)]
        common: Common,
        /// Comma-separated list of quantities.
        #[arg(long, value_delimiter = ',', required = true)]
        quantity: Vec<Quantity>,
    },
    /// Per-collision energy ledger along the trajectory.
    ///
    /// CSV columns: n, p, c_re, c_im, delta_e_s, q1, q2, w1, w2, balance.
    Thermo(Common),
    /// Simulated and closed-form thermalization runtimes.
    ///
    /// CSV columns: the swept variable (tau without a sweep), n_sim, n_an.
    Runtime(Common),
    /// Random oracle suite; prints `FAIL <check> <params> <residual>` lines.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
}

#[derive(Args)]
struct Common {
    /// Run configuration file.
    #[arg(long)]
    config: PathBuf,
    /// CSV destination (default: `output` from the config, else stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Sweep variable: jzz, tau, beta, jxx or jyy.
    #[arg(long, requires_all = ["from", "to", "points"])]
    vary: Option<SweepVariable>,
    #[arg(long)]
    from: Option<f64>,
    #[arg(long)]
    to: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
}

impl Common {
    fn load(&self) -> Result<RunConfig, CliError> {
        let text = std::fs::read_to_string(&self.config)?;
        let mut cfg = cli::parse_config(&text)?;
        if let (Some(v), Some(from), Some(to), Some(points)) =
            (self.vary, self.from, self.to, self.points)
        {
            cfg.sweep = Some(SweepSpec::new(v, from, to, points)?);
        }
        if self.out.is_some() {
            cfg.output = self.out.clone();
        }
        Ok(cfg)
    }
}

fn emit(table: &Table, cfg: &RunConfig) -> Result<(), CliError> {
    match &cfg.output {
        Some(path) => table.write_csv(BufWriter::new(File::create(path)?)),
        None => table.write_csv(io::stdout().lock()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Dynamics(c) => {
            let cfg = c.load()?;
            emit(&cli::dynamics(&cfg)?, &cfg)?;
        }
        Command::Sweep { common, quantity } => {
            let cfg = common.load()?;
            emit(&cli::sweep(&cfg, &quantity, &cli::worker_pool()?)?, &cfg)?;
        }
        Command::Thermo(c) => {
            let cfg = c.load()?;
            emit(&cli::thermo(&cfg)?, &cfg)?;
        }
        Command::Runtime(c) => {
            let cfg = c.load()?;
            emit(&cli::runtime(&cfg, &cli::worker_pool()?)?, &cfg)?;
        }
        Command::Verify { seed, trials } => {
            let report = cli::verify(seed, trials);
            let mut out = io::stdout().lock();
            for f in &report.failures {
                writeln!(out, "{f}")?;
            }
            eprintln!(
                "{} trials, {} checks, {} failures",
                report.trials,
                report.checks,
                report.failures.len()
            );
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
