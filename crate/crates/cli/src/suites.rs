//! `verify <suite>`: bounds per suite and the mapping onto the core sweeps.

use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use hecke_core::suites::{self, BridgeTolerances, SuiteReport, BRIDGE_KAPPAS};

use crate::config::Config;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Pieri,
    FiniteRelations,
    AffineOracle,
    GradedRelations,
    Leibniz,
    Bridge,
    Antispherical,
}

impl Suite {
    fn default_max_n(self) -> usize {
        match self {
            Suite::Pieri => 8,
            Suite::FiniteRelations => 5,
            Suite::AffineOracle => 3,
            Suite::GradedRelations => 7,
            Suite::Leibniz | Suite::Bridge | Suite::Antispherical => 4,
        }
    }

    /// Ranks above this make a single run impractical.
    fn limit(self) -> usize {
        match self {
            Suite::Pieri => 10,
            Suite::FiniteRelations | Suite::AffineOracle | Suite::Leibniz => 5,
            Suite::GradedRelations => 9,
            Suite::Bridge => 6,
            Suite::Antispherical => 5,
        }
    }
}

#[derive(Args, Clone, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Largest rank checked.
    #[arg(long = "max-n", visible_alias = "n")]
    pub max_n: Option<usize>,
    /// Random samples (products for affine-oracle, triples for antispherical).
    #[arg(long)]
    pub samples: Option<usize>,
    /// Largest rank of the modules checked by affine-oracle.
    #[arg(long = "module-max-n", default_value_t = 4)]
    pub module_max_n: usize,
    /// Seed of the random samples.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Fingerprint tolerance of the bridge suite.
    #[arg(long = "fingerprint-tol", default_value_t = 1e-6)]
    pub fingerprint_tol: f64,
}

pub fn run(args: &VerifyArgs, cfg: &Config) -> Result<(Value, SuiteReport), String> {
    let suite = args.suite;
    let max_n = args.max_n.unwrap_or(suite.default_max_n());
    if max_n > suite.limit() {
        return Err(format!("--max-n {max_n} is above the supported {} for this suite", suite.limit()));
    }
    if suite == Suite::AffineOracle && args.module_max_n > 5 {
        return Err("--module-max-n is limited to 5".into());
    }
    let name = suite.to_possible_value().expect("no skipped variants").get_name().to_string();
    let mut inputs = json!({ "suite": name, "max_n": max_n });
    let report = match suite {
        Suite::Pieri => suites::pieri(max_n),
        Suite::FiniteRelations => suites::finite_relations(max_n),
        Suite::AffineOracle => {
            let pairs = args.samples.unwrap_or(200);
            inputs["samples"] = json!(pairs);
            inputs["module_max_n"] = json!(args.module_max_n);
            inputs["seed"] = json!(args.seed);
            suites::affine_oracle(max_n, pairs, args.module_max_n, args.seed)
        }
        Suite::GradedRelations => suites::graded_relations(max_n),
        Suite::Leibniz => {
            inputs["seed"] = json!(args.seed);
            suites::leibniz(max_n, args.seed)
        }
        Suite::Bridge => {
            let tols =
                BridgeTolerances { relations: cfg.tol, fingerprint: args.fingerprint_tol, cluster: cfg.cluster_tol, ..Default::default() };
            inputs["q0"] = json!(cfg.q0);
            inputs["kappa_over_p"] = json!(BRIDGE_KAPPAS);
            inputs["tolerances"] = json!(tols);
            suites::bridge(max_n, &[cfg.q0], &BRIDGE_KAPPAS, &tols)
        }
        Suite::Antispherical => {
            let triples = args.samples.unwrap_or(100);
            inputs["samples"] = json!(triples);
            inputs["seed"] = json!(args.seed);
            suites::antispherical(max_n, triples, args.seed)
        }
    };
    Ok((inputs, report))
}
