//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hecke_core::suites::{self, BridgeTolerances, SuiteReport, BRIDGE_KAPPAS, BRIDGE_Q0S};

const SEED: u64 = 20_240_601;

struct Criterion {
    id: u8,
    name: &'static str,
    bounds: &'static str,
    /// Wall-clock budget; exceeding it fails the criterion.
    budget: Option<Duration>,
    run: fn() -> SuiteReport,
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            name: "derivatives of Speh modules follow vertical strips",
            bounds: "all λ ⊢ n ≤ 8, 0 ≤ i ≤ n, exact",
            budget: Some(Duration::from_secs(300)),
            run: || suites::pieri(8),
        },
        Criterion {
            id: 2,
            name: "sign projector identities in H(S_n)",
            bounds: "n ≤ 5, exact over Q(q)",
            budget: None,
            run: || suites::finite_relations(5),
        },
        Criterion {
            id: 3,
            name: "Bernstein products agree with the polynomial realization",
            bounds: "generator products and 240 random pairs for n ≤ 3; module relations exactly zero for n ≤ 4",
            budget: None,
            run: || suites::affine_oracle(3, 240, 4, SEED),
        },
        Criterion {
            id: 4,
            name: "antispherical module",
            bounds: "T_w on the generator for n ≤ 4; 100 random associativity triples, exact",
            budget: None,
            run: || suites::antispherical(4, 100, SEED),
        },
        Criterion {
            id: 5,
            name: "Speh modules satisfy the graded relations",
            bounds: "all λ ⊢ n ≤ 7, symbolic in (p, κ)",
            budget: None,
            run: || suites::graded_relations(7),
        },
        Criterion {
            id: 6,
            name: "Leibniz rule for derivatives of induced modules",
            bounds: "two-block Levi data, n ≤ 4, all i, exact",
            budget: None,
            run: || suites::leibniz(4, SEED),
        },
        Criterion {
            id: 7,
            name: "graded-to-affine bridge",
            bounds: "λ ⊢ n ≤ 5, κ/p ∈ {0, ±1/2, ±1, 3/2}, q0 ∈ {2, 3, 4}; relations < 1e-8, Θ spectra 1e-10, fingerprints 1e-6",
            budget: Some(Duration::from_secs(600)),
            run: || {
                let tols = BridgeTolerances { relations: 1e-8, spectrum: 1e-10, fingerprint: 1e-6, cluster: 1e-9 };
                suites::bridge(5, &BRIDGE_Q0S, &BRIDGE_KAPPAS, &tols)
            },
        },
        Criterion {
            id: 8,
            name: "principal series derivatives have dimension n!/i!",
            bounds: "n ≤ 5, generic rational t, guard enforced, exact",
            budget: None,
            run: || suites::principal(5, SEED),
        },
    ]
}

fn main() -> ExitCode {
    let mut all = true;
    for c in criteria() {
        let start = Instant::now();
        let rep = (c.run)();
        let elapsed = start.elapsed();
        let in_budget = c.budget.is_none_or(|b| elapsed <= b);
        let pass = rep.pass && in_budget;
        all &= pass;
        println!(
            "criterion {} [{}] {} ({}): {} cases, max residual {:e}, {:.1}s",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.name,
            c.bounds,
            rep.cases,
            rep.max_residual,
            elapsed.as_secs_f64()
        );
        if !in_budget {
            println!("    over the {:?} budget", c.budget.expect("checked above"));
        }
        for f in rep.failures.iter().take(10) {
            println!("    {f}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
