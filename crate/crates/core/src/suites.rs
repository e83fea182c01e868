//! Parameterized verification sweeps.
//!
//! Each suite checks a family of identities against an independent oracle
//! and returns a [`SuiteReport`]; the command line and the acceptance tests
//! both drive these.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{Partition, Permutation};
use crate::error::Result;
use crate::graded::{check_graded_relations, pieri_sweep, speh_module, GradedModule};
use crate::hecke::derivative::binomial;
use crate::hecke::{
    antispherical_act, bz_derivative, bz_subspace_brute, central_block, check_generic, induce, leibniz_check,
    poincare, principal_derivative_dim, principal_series, sign_projector, AffineElement, AntisphericalVector,
    ExactModule, FiniteHeckeElement, PolyOracle,
};
use crate::linalg::Matrix;
use crate::lusztig::{bridge_bz_compare, lambda_functor, sign_dim_compare, theta_spectrum_deviation, BridgeParams};
use crate::scalar::{rat, PkPoly, QRational};
use crate::symgroup::{jm_by_transpositions, specht_module};

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub max_residual: f64,
    pub failures: Vec<String>,
    pub pass: bool,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.to_string(), cases: 0, max_residual: 0.0, failures: Vec::new(), pass: true }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
            self.pass = false;
        }
    }

    fn check_result<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("{}: {e}", what()));
                None
            }
        }
    }

    fn residual(&mut self, r: f64, tol: f64, what: impl FnOnce() -> String) {
        self.max_residual = self.max_residual.max(r);
        self.check(r <= tol, || format!("{} (residual {r:e})", what()));
    }

    fn merge(&mut self, other: SuiteReport) {
        self.cases += other.cases;
        self.max_residual = self.max_residual.max(other.max_residual);
        self.pass &= other.pass;
        self.failures.extend(other.failures);
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn r(v: i64) -> QRational {
    QRational::from_int(v)
}

/// A random element of `H_n`: up to three terms `c θ_x T_w` with small
/// weights and coefficients in `Q(q)`.
pub fn random_affine_element(rng: &mut impl Rng, n: usize) -> AffineElement {
    let coeffs = [r(1), r(-1), r(2), r(-3), QRational::q(), QRational::q().sub(&r(1)), QRational::q().inv().expect("q is nonzero")];
    let perms = Permutation::all(n);
    let mut h = AffineElement::zero(n);
    for _ in 0..rng.random_range(1..=3) {
        let x: Vec<i64> = (0..n).map(|_| rng.random_range(-1..=1)).collect();
        let w = perms.choose(rng).expect("S_n is nonempty").clone();
        let c = coeffs.choose(rng).expect("nonempty").clone();
        h = h.add(&AffineElement::monomial(c, x, w));
    }
    h
}

pub fn random_antispherical_vector(rng: &mut impl Rng, n: usize) -> AntisphericalVector {
    let terms: Vec<(Vec<i64>, QRational)> = (0..rng.random_range(1..=3))
        .map(|_| ((0..n).map(|_| rng.random_range(-2..=2)).collect(), r(rng.random_range(-3..=3))))
        .collect();
    AntisphericalVector::from_terms(n, terms)
}

/// Distinct integers in `2..=60`, which are generic since `q` is formal.
fn random_generic_t(rng: &mut impl Rng, n: usize) -> Vec<QRational> {
    let mut pool: Vec<i64> = (2..=60).collect();
    pool.shuffle(rng);
    pool[..n].iter().map(|&v| r(v)).collect()
}

/// Every `λ ⊢ n ≤ max_n` and `0 ≤ i ≤ n`: the `i`-th derivative of the
/// Speh module, decomposed by the character oracle, is the sum of the
/// vertical strips of `λ` with multiplicity one.
pub fn pieri(max_n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("pieri");
    for case in pieri_sweep(max_n, &PkPoly::k()) {
        rep.check(case.pass, || {
            let err = case.error.as_deref().unwrap_or("decomposition differs from vertical strips");
            format!("λ = {}, i = {}: {err}", case.shape, case.i)
        });
    }
    rep
}

/// `P_n(z)` by enumerating `S_n`.
fn poincare_by_enumeration(n: usize, z: &QRational) -> QRational {
    Permutation::all(n).iter().fold(QRational::zero(), |acc, w| acc.add(&z.pow(w.length() as i32).expect("z is nonzero")))
}

/// Quadratic and braid relations of `H_{S_n}`, and the sign projector
/// identities `S^2 = P_n(1/q) S`, `T_s S = S T_s = -S`, for `n ≤ max_n`.
pub fn finite_relations(max_n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("finite-relations");
    let q = QRational::q();
    for n in 0..=max_n {
        let t = |j| FiniteHeckeElement::simple(n, j);
        for j in 1..n {
            let lhs = t(j).multiply(&t(j)).expect("same rank");
            let rhs = t(j).scale(&q.sub(&r(1))).add(&FiniteHeckeElement::one(n).scale(&q));
            rep.check(lhs == rhs, || format!("n = {n}: quadratic T_{j}"));
            for k in j + 1..n {
                let (l, rr) = if k == j + 1 {
                    (t(j).multiply(&t(k)).and_then(|a| a.multiply(&t(j))), t(k).multiply(&t(j)).and_then(|a| a.multiply(&t(k))))
                } else {
                    (t(j).multiply(&t(k)), t(k).multiply(&t(j)))
                };
                rep.check(l.ok() == rr.ok(), || format!("n = {n}: braid T_{j} T_{k}"));
            }
        }
        let s = sign_projector(n);
        let inv_q = q.inv().expect("q is nonzero");
        let pn = poincare_by_enumeration(n, &inv_q);
        rep.check(pn == poincare(n, &inv_q), || format!("n = {n}: product formula for P_n"));
        let s2 = s.multiply(&s).expect("same rank");
        rep.check(s2 == s.scale(&pn), || format!("n = {n}: S^2 = P_n(1/q) S"));
        for j in 1..n {
            let minus = s.neg();
            rep.check(t(j).multiply(&s).ok() == Some(minus.clone()), || format!("n = {n}: T_{j} S = -S"));
            rep.check(s.multiply(&t(j)).ok() == Some(minus), || format!("n = {n}: S T_{j} = -S"));
        }
    }
    rep
}

fn generators(n: usize) -> Vec<AffineElement> {
    let mut out = Vec::new();
    for k in 0..n {
        for e in [1, -1] {
            let mut x = vec![0; n];
            x[k] = e;
            out.push(AffineElement::theta(x));
        }
    }
    out.extend((1..n).map(|j| AffineElement::t_simple(n, j)));
    out
}

fn check_module(rep: &mut SuiteReport, label: &str, m: &ExactModule) {
    let rel = m.verify_relations();
    rep.max_residual = rep.max_residual.max(rel.max_residual);
    rep.check(rel.max_residual == 0.0, || format!("{label}: {:?}", rel.failures));
}

/// Products of generators and of `pairs` random elements against the
/// polynomial realization (`n ≤ max_n`), and exact relations of the
/// modules built by this crate up to rank `module_max_n`.
pub fn affine_oracle(max_n: usize, pairs: usize, module_max_n: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("affine-oracle");
    let mut g = rng(seed);
    for n in 1..=max_n {
        let oracle = PolyOracle::new(n);
        let gens = generators(n);
        for a in &gens {
            for b in &gens {
                let ok = oracle.check_product(a, b, 1);
                rep.check(matches!(ok, Ok(true)), || format!("n = {n}: generator product ({a}) ({b})"));
            }
        }
    }
    let ranks: Vec<usize> = (0..pairs).map(|k| 1 + k % max_n.max(1)).collect();
    let samples: Vec<(AffineElement, AffineElement)> =
        ranks.iter().map(|&n| (random_affine_element(&mut g, n), random_affine_element(&mut g, n))).collect();
    let results: Vec<(String, bool)> = samples
        .par_iter()
        .map(|(a, b)| (format!("({a}) ({b})"), matches!(PolyOracle::new(a.n()).check_product(a, b, 1), Ok(true))))
        .collect();
    for (label, ok) in results {
        rep.check(ok, || format!("random product {label}"));
    }
    rep.merge(module_relations(module_max_n, &mut g));
    rep
}

fn module_relations(max_n: usize, g: &mut impl Rng) -> SuiteReport {
    let mut rep = SuiteReport::new("modules");
    let q = QRational::q();
    let mut built: Vec<(String, ExactModule)> = Vec::new();
    for n in 1..=max_n {
        let t = random_generic_t(g, n);
        if let Some(m) = rep.check_result(principal_series(&t), || format!("principal series n = {n}")) {
            built.push((format!("M(t), n = {n}"), m));
        }
        let ladder: Vec<QRational> = (0..n).map(|k| q.pow(k as i32).expect("q is nonzero")).collect();
        if let Some(m) = rep.check_result(principal_series(&ladder), || format!("principal series at q-ladder, n = {n}")) {
            built.push((format!("M(1, q, ..), n = {n}"), m));
        }
        let down: Vec<QRational> = ladder.iter().rev().cloned().collect();
        for (label, t, sign) in [("Steinberg", ladder, true), ("trivial", down, false)] {
            if let Some(m) = rep.check_result(ExactModule::character(&t, sign), || format!("{label} n = {n}")) {
                built.push((format!("{label}, n = {n}"), m));
            }
        }
    }
    for n1 in 1..max_n {
        for n2 in 1..=max_n - n1 {
            let a = principal_series(&random_generic_t(g, n1));
            let t2 = random_generic_t(g, n2);
            let b = if n2 == 1 { ExactModule::character(&t2, false) } else { principal_series(&t2) };
            let ind = a.and_then(|a| induce(&a, &b?));
            if let Some(m) = rep.check_result(ind, || format!("induction {n1} + {n2}")) {
                built.push((format!("induced {n1} + {n2}"), m));
            }
        }
    }
    let mut derived = Vec::new();
    for (label, m) in &built {
        if m.dim() > 24 {
            continue;
        }
        for i in 1..=m.n() {
            if let Some(d) = rep.check_result(bz_derivative(m, i), || format!("BZ_{i} of {label}")) {
                derived.push((format!("BZ_{i} of {label}"), d));
            }
        }
    }
    for n in 2..=max_n.min(3) {
        let t = random_generic_t(g, n);
        let ps = principal_series(&t).expect("nonzero parameters");
        let mut swapped = t.clone();
        swapped.swap(0, 1);
        let mut levi = vec![1; n - 1];
        levi[0] = 2;
        for (blocks, chars) in [(vec![1; n], vec![t.clone()]), (levi, vec![t.clone(), swapped])] {
            let label = format!("central block {blocks:?}, n = {n}");
            if let Some(m) = rep.check_result(central_block(&ps, &chars, &blocks), || label.clone()) {
                rep.check(m.dim() == chars.len(), || format!("{label}: dimension {}", m.dim()));
                derived.push((label, m));
            }
        }
    }
    for (label, m) in built.iter().chain(&derived) {
        check_module(&mut rep, label, m);
    }
    rep
}

/// `T_w` on the generator is `(-1)^{l(w)}` for `w ∈ S_n`, `n ≤ max_n`, and
/// `triples` random `(h1, h2, v)` satisfy `(h1 h2) v = h1 (h2 v)`.
pub fn antispherical(max_n: usize, triples: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("antispherical");
    for n in 1..=max_n {
        let gen = AntisphericalVector::generator(n);
        for w in Permutation::all(n) {
            let image = antispherical_act(&AffineElement::t(w.clone()), &gen).ok();
            rep.check(image == Some(gen.scale(&r(w.sign()))), || format!("T_{w} on the generator"));
        }
    }
    let mut g = rng(seed);
    let samples: Vec<_> = (0..triples)
        .map(|k| {
            let n = 1 + k % max_n.max(1);
            (random_affine_element(&mut g, n), random_affine_element(&mut g, n), random_antispherical_vector(&mut g, n))
        })
        .collect();
    let results: Vec<(String, bool)> = samples
        .par_iter()
        .map(|(h1, h2, v)| {
            let lhs = h1.multiply(h2).and_then(|h| antispherical_act(&h, v));
            let rhs = antispherical_act(h2, v).and_then(|u| antispherical_act(h1, &u));
            (format!("h1 = {h1}, h2 = {h2}, v = {v}"), matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b))
        })
        .collect();
    for (label, ok) in results {
        rep.check(ok, || format!("associativity {label}"));
    }
    rep
}

/// For every `λ ⊢ n ≤ max_n`, the Speh module satisfies the graded
/// relations over `Q[p, κ]`, and `E_k = κ - p X_k` with `X_k` the sum of
/// transpositions `(j k)`, `j < k`.
pub fn graded_relations(max_n: usize) -> SuiteReport {
    let shapes: Vec<Partition> = (0..=max_n).flat_map(Partition::all).collect();
    let reports: Vec<SuiteReport> = shapes
        .par_iter()
        .map(|lambda| {
            let mut rep = SuiteReport::new("graded-relations");
            let kappa = PkPoly::k();
            let m = speh_module(lambda, &kappa);
            let rel = check_graded_relations(&m);
            rep.check(rel.passed(), || format!("λ = {lambda}: {:?}", rel.failures));
            let sp = specht_module(lambda);
            for k in 1..=m.n() {
                let x = jm_by_transpositions(sp.gens(), sp.dim(), k);
                let want = Matrix::scalar(m.dim(), kappa.clone())
                    .sub(&x.map(|c| PkPoly::constant(c.clone())).scale(&PkPoly::p()));
                rep.check(*m.eps(k) == want, || format!("λ = {lambda}: E_{k} differs from κ - p X_{k}"));
            }
            rep
        })
        .collect();
    let mut rep = SuiteReport::new("graded-relations");
    for r in reports {
        rep.merge(r);
    }
    rep
}

/// Modules placed on one block of a two-block Levi subalgebra.
fn leibniz_factors(n: usize, g: &mut impl Rng) -> Vec<(String, ExactModule)> {
    let q = QRational::q();
    let ladder: Vec<QRational> = (0..n).map(|k| q.pow(k as i32).expect("q is nonzero").scale(&rat(5, 1))).collect();
    let down: Vec<QRational> = ladder.iter().rev().cloned().collect();
    let mut out = vec![
        (format!("Steinberg({n})"), ExactModule::character(&ladder, true).expect("q-ladder")),
        (format!("trivial({n})"), ExactModule::character(&down, false).expect("q-ladder")),
    ];
    if n <= 2 {
        let t = random_generic_t(g, n);
        out.push((format!("M(t), n = {n}"), principal_series(&t).expect("nonzero parameters")));
    }
    out
}

/// Leibniz rule for every two-block Levi `(n1, n2)` with `n1 + n2 ≤ max_n`,
/// every `i`, and a few modules on each block.
pub fn leibniz(max_n: usize, seed: u64) -> SuiteReport {
    let mut g = rng(seed);
    let mut cases = Vec::new();
    for n1 in 1..max_n {
        for n2 in 1..=max_n - n1 {
            for a in leibniz_factors(n1, &mut g) {
                for b in leibniz_factors(n2, &mut g) {
                    if a.1.dim() * b.1.dim() * binomial(n1 + n2, n1) > 24 {
                        continue;
                    }
                    for i in 0..=n1 + n2 {
                        cases.push((a.clone(), b.clone(), i));
                    }
                }
            }
        }
    }
    let reports: Vec<SuiteReport> = cases
        .par_iter()
        .map(|((la, a), (lb, b), i)| {
            let mut rep = SuiteReport::new("leibniz");
            let label = || format!("{la} x {lb}, i = {i}");
            if let Some(res) = rep.check_result(leibniz_check(a, b, *i), label) {
                rep.check(res.pass, || {
                    format!("{}: dims {} vs {}, central match {}", label(), res.lhs_dim, res.rhs_dim, res.central_match)
                });
            }
            rep
        })
        .collect();
    let mut rep = SuiteReport::new("leibniz");
    for r in reports {
        rep.merge(r);
    }
    rep
}

/// Tolerances of the bridge suite.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BridgeTolerances {
    /// Relation residual of every `Λ(M)`.
    pub relations: f64,
    /// Spectrum of `Θ_k` against `exp` of the spectrum of `E_k`.
    pub spectrum: f64,
    /// Fingerprints of the two derivative pipelines.
    pub fingerprint: f64,
    pub cluster: f64,
}

impl Default for BridgeTolerances {
    fn default() -> Self {
        BridgeTolerances { relations: 1e-8, spectrum: 1e-10, fingerprint: 1e-6, cluster: 1e-9 }
    }
}

pub const BRIDGE_KAPPAS: [f64; 6] = [0.0, 0.5, -0.5, 1.0, -1.0, 1.5];
pub const BRIDGE_Q0S: [f64; 3] = [2.0, 3.0, 4.0];

/// Every `λ ⊢ n ≤ max_n`, `κ/p` in `kappas`, `q0` in `q0s`: relations and
/// `Θ`-spectra of `Λ(M)`; for each `0 ≤ i ≤ n` the two derivative pipelines
/// and the sign-space dimensions.
pub fn bridge(max_n: usize, q0s: &[f64], kappas: &[f64], tols: &BridgeTolerances) -> SuiteReport {
    let shapes: Vec<Partition> = (1..=max_n).flat_map(Partition::all).collect();
    let mut cases = Vec::new();
    for lambda in &shapes {
        for &q0 in q0s {
            for &k in kappas {
                cases.push((lambda.clone(), q0, k));
            }
        }
    }
    let reports: Vec<SuiteReport> = cases
        .par_iter()
        .map(|(lambda, q0, k)| {
            let mut rep = SuiteReport::new("bridge");
            let params = BridgeParams { q0: *q0, tol: tols.relations, cluster_tol: tols.cluster };
            let label = format!("λ = {lambda}, q0 = {q0}, κ/p = {k}");
            let m: GradedModule = speh_module(lambda, &PkPoly::k());
            let p = q0.ln();
            let num = m.evaluate(p, k * p);
            let Some(lam) = rep.check_result(lambda_functor(&num, &params), || format!("Λ at {label}")) else {
                return rep;
            };
            rep.residual(lam.verify_relations().max_residual, tols.relations, || format!("{label}: relations of Λ(M)"));
            let dev = theta_spectrum_deviation(&num, &lam);
            rep.check(dev <= tols.spectrum, || format!("{label}: Θ spectrum off by {dev:e}"));
            for i in 0..=lambda.size() {
                let input = lambda.to_string();
                if let Some(b) = rep.check_result(bridge_bz_compare(&input, &m, *k, i, &params, tols.fingerprint), || {
                    format!("derivatives at {label}, i = {i}")
                }) {
                    rep.max_residual = rep.max_residual.max(b.max_residual);
                    rep.check(b.pass, || format!("{label}, i = {i}: dims {:?}, fingerprints match {}", b.dims, b.fingerprint_match));
                }
                if let Some(s) =
                    rep.check_result(sign_dim_compare(&input, &m, *k, i, &params), || format!("sign space at {label}, i = {i}"))
                {
                    rep.check(s.pass, || format!("{label}, i = {i}: sign dims {:?}", s.dims));
                }
            }
            rep
        })
        .collect();
    let mut rep = SuiteReport::new("bridge");
    for r in reports {
        rep.merge(r);
    }
    rep
}

/// `dim BZ_i(M(t)) = n!/i!` at random generic `t`, `n ≤ max_n`; non-generic
/// parameters are refused by the guard.
pub fn principal(max_n: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("principal");
    let mut g = rng(seed);
    let q = QRational::q();
    for n in 2..=max_n {
        let mut bad = random_generic_t(&mut g, n);
        bad[1] = bad[0].mul(&q);
        rep.check(check_generic(&bad).is_err(), || format!("n = {n}: guard accepted a q-related pair"));
    }
    let params: Vec<Vec<QRational>> = (1..=max_n).map(|n| random_generic_t(&mut g, n)).collect();
    let reports: Vec<SuiteReport> = params
        .par_iter()
        .map(|t| {
            let n = t.len();
            let mut rep = SuiteReport::new("principal");
            if rep.check_result(check_generic(t), || format!("n = {n}: guard")).is_none() {
                return rep;
            }
            let Some(m) = rep.check_result(principal_series(t), || format!("M(t), n = {n}")) else {
                return rep;
            };
            for i in 0..=n {
                if let Some(d) = rep.check_result(bz_derivative(&m, i), || format!("BZ_{i}, n = {n}")) {
                    let want = principal_derivative_dim(n, i);
                    rep.check(d.dim() == want, || format!("n = {n}, i = {i}: dim {} but n!/i! = {want}", d.dim()));
                }
                if n <= 3 {
                    let brute = bz_subspace_brute(&m, i).map(|s| s.dim());
                    rep.check(brute.as_ref().ok() == Some(&principal_derivative_dim(n, i)), || {
                        format!("n = {n}, i = {i}: expanded projector gives {brute:?}")
                    });
                }
            }
            rep
        })
        .collect();
    for r in reports {
        rep.merge(r);
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for rep in [
            pieri(3),
            finite_relations(3),
            affine_oracle(2, 10, 2, 1),
            antispherical(2, 10, 1),
            graded_relations(3),
            leibniz(2, 1),
            bridge(2, &[3.0], &[0.0, 0.5], &BridgeTolerances::default()),
            principal(3, 1),
        ] {
            assert!(rep.pass, "{}: {:?}", rep.suite, rep.failures);
            assert!(rep.cases > 0);
        }
    }

    #[test]
    fn failures_are_reported() {
        let mut rep = SuiteReport::new("x");
        rep.residual(1.0, 0.5, || "too big".into());
        assert!(!rep.pass);
        assert_eq!(rep.failures.len(), 1);
        assert_eq!(rep.max_residual, 1.0);
    }
}
