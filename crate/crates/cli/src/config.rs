//! Numeric defaults, overridable by environment variables and then flags.

use clap::Args;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Config {
    pub q0: f64,
    pub tol: f64,
    pub cluster_tol: f64,
}

impl Config {
    pub const DEFAULT: Config = Config { q0: 4.0, tol: 1e-8, cluster_tol: 1e-9 };
}

/// Flags for the numeric parameters. Clap reads the environment variable
/// when the flag is absent.
#[derive(Args, Clone, Debug, Default)]
pub struct NumericArgs {
    /// Specialization of q for numeric computations (> 1).
    #[arg(long = "q", env = "HECKEBZ_Q0")]
    pub q0: Option<f64>,
    /// Relation residual tolerance.
    #[arg(long, env = "HECKEBZ_TOL")]
    pub tol: Option<f64>,
    /// Relative eigenvalue clustering tolerance.
    #[arg(long = "cluster-tol", env = "HECKEBZ_CLUSTER_TOL")]
    pub cluster_tol: Option<f64>,
}

impl NumericArgs {
    pub fn resolve(&self) -> Result<Config, String> {
        let d = Config::DEFAULT;
        let c = Config {
            q0: self.q0.unwrap_or(d.q0),
            tol: self.tol.unwrap_or(d.tol),
            cluster_tol: self.cluster_tol.unwrap_or(d.cluster_tol),
        };
        if !(c.q0 > 1.0 && c.q0.is_finite()) {
            return Err(format!("q must be a finite number > 1, got {}", c.q0));
        }
        if !(c.tol > 0.0 && c.cluster_tol > 0.0) {
            return Err("tolerances must be positive".into());
        }
        Ok(c)
    }
}

/// Size of the worker pool from `HECKEBZ_THREADS`, if set.
pub fn thread_cap() -> Result<Option<usize>, String> {
    match std::env::var("HECKEBZ_THREADS") {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(format!("HECKEBZ_THREADS must be a positive integer, got {v:?}")),
        },
    }
}
