//! `hecke-bz`: derivatives of Speh modules, verification suites and
//! principal series from the command line.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 usage error.

mod config;
mod report;
mod suites;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use hecke_core::combinatorics::Partition;
use hecke_core::graded::pieri_verify;
use hecke_core::hecke::{bz_derivative, is_generic, principal_derivative_dim, principal_series};
use hecke_core::scalar::{parse_qrational, parse_rational, rat, PkPoly, QRational};

use config::{thread_cap, NumericArgs};
use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "hecke-bz", version, about = "Derivatives of Hecke-algebra modules and their verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Add wall-clock timings to the report.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Derive a Speh module and compare with the vertical strips of its shape.
    DeriveSpeh {
        /// Partition, e.g. 3,2,2.
        #[arg(long)]
        shape: String,
        #[arg(long)]
        i: usize,
        /// Set κ = r·p for a rational r; κ stays symbolic when omitted.
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        #[command(flatten)]
        args: suites::VerifyArgs,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Build the principal series module M(t) over Q(q).
    Principal {
        #[arg(long)]
        n: usize,
        /// Comma-separated nonzero entries in Q(q), e.g. 1,4 or 2,q^2.
        #[arg(long, value_delimiter = ',')]
        t: Vec<String>,
        /// Also compute BZ_i.
        #[arg(long)]
        derive: Option<usize>,
        /// Include the matrices of Θ_k and T_j.
        #[arg(long)]
        matrices: bool,
    },
}

/// A message for exit code 2.
type Usage = String;

fn derive_speh(shape: &str, i: usize, kappa: Option<&str>) -> Result<Report, Usage> {
    let lambda: Partition = shape.parse().map_err(|e| format!("--shape: {e}"))?;
    if i > lambda.size() {
        return Err(format!("--i {i} exceeds |λ| = {}", lambda.size()));
    }
    let kappa_poly = match kappa {
        None => PkPoly::k(),
        Some(r) => {
            let r = parse_rational(r).map_err(|e| format!("--kappa: {e}"))?;
            PkPoly::linear(rat(0, 1), r, rat(0, 1))
        }
    };
    let rep = pieri_verify(&lambda, i, &kappa_poly);
    let inputs = json!({ "shape": lambda, "i": i, "kappa": kappa_poly.render() });
    let pass = rep.pass;
    Ok(Report::new("derive-speh", inputs, serde_json::to_value(rep).expect("serializable"), pass))
}

fn principal(n: usize, t: &[String], derive: Option<usize>, matrices: bool) -> Result<Report, Usage> {
    if t.len() != n {
        return Err(format!("--t has {} entries but --n is {n}", t.len()));
    }
    let t: Vec<QRational> =
        t.iter().map(|s| parse_qrational(s).map_err(|e| format!("--t: {e}"))).collect::<Result<_, _>>()?;
    if let Some(k) = t.iter().position(QRational::is_zero) {
        return Err(format!("t_{} = 0", k + 1));
    }
    if derive.is_some_and(|i| i > n) {
        return Err(format!("--derive exceeds n = {n}"));
    }
    let m = principal_series(&t).map_err(|e| e.to_string())?;
    let rel = m.verify_relations();
    let generic = is_generic(&t);
    let mut results = json!({
        "dim": m.dim(),
        "generic": generic,
        "max_residual": rel.max_residual,
        "relation_failures": rel.failures,
    });
    let mut pass = rel.passed();
    if matrices {
        results["module"] = m.to_json();
    }
    if let Some(i) = derive {
        match bz_derivative(&m, i) {
            Ok(d) => {
                results["derivative"] = json!({ "i": i, "dim": d.dim() });
                if generic {
                    let want = principal_derivative_dim(n, i);
                    results["derivative"]["expected_dim"] = json!(want);
                    pass &= d.dim() == want;
                }
            }
            Err(e) => {
                results["derivative"] = json!({ "i": i, "error": e.to_string() });
                pass = false;
            }
        }
    }
    let inputs = json!({ "n": n, "t": t.iter().map(|x| x.to_string()).collect::<Vec<_>>(), "derive": derive });
    Ok(Report::new("principal", inputs, results, pass))
}

fn verify(args: &suites::VerifyArgs, numeric: &NumericArgs) -> Result<Report, Usage> {
    let cfg = numeric.resolve().map_err(Usage::from)?;
    let (inputs, rep) = suites::run(args, &cfg).map_err(Usage::from)?;
    let pass = rep.pass;
    let results: Value = serde_json::to_value(&rep).expect("serializable");
    Ok(Report::new("verify", inputs, results, pass))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match thread_cap() {
        Ok(Some(n)) => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                eprintln!("hecke-bz: {e}");
                return ExitCode::from(2);
            }
        }
        Ok(None) => {}
        Err(e) => {
            eprintln!("hecke-bz: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::DeriveSpeh { shape, i, kappa } => derive_speh(shape, *i, kappa.as_deref()),
        Command::Verify { args, numeric } => verify(args, numeric),
        Command::Principal { n, t, derive, matrices } => principal(*n, t, *derive, *matrices),
    };
    match outcome {
        Ok(mut report) => {
            if cli.timings {
                report.timings = Some(BTreeMap::from([("total_s".to_string(), start.elapsed().as_secs_f64())]));
            }
            println!("{}", report.render(cli.format));
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("hecke-bz: {msg}");
            ExitCode::from(2)
        }
    }
}
