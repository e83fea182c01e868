//! The graded affine Hecke algebra of `GL(n)`: generalized Speh modules
//! through the Jucys–Murphy homomorphism, the derivative `gBZ_i`, and the
//! vertical-strip rule for derivatives of Speh modules.
//!
//! Exact modules carry `ε_k` as matrices over `Q[p, k]` (`p = log q`, `k`
//! the Speh parameter κ) and the reflections as rational matrices. The
//! defining cross relation is `ε_j t_j - t_j ε_{j+1} = p`,
//! `ε_{j+1} t_j - t_j ε_j = -p`, with `ε_k` commuting with distant `t_j`.

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{hook_dimension, Partition};
use crate::error::{Error, Result};
use crate::linalg::{char_poly, Matrix};
use crate::scalar::{rat, BigRational, PkPoly, Scalar};
use crate::symgroup::{check_coxeter, decompose_sn, sign_isotypic, specht_module, QMatrix};

pub type PkMatrix = Matrix<PkPoly>;

fn lift(m: &QMatrix) -> PkMatrix {
    m.map(|c| PkPoly::constant(c.clone()))
}

#[derive(Clone, Debug)]
pub struct GradedModule {
    n: usize,
    dim: usize,
    eps: Vec<PkMatrix>,
    gens: Vec<QMatrix>,
}

impl GradedModule {
    pub fn new(dim: usize, eps: Vec<PkMatrix>, gens: Vec<QMatrix>) -> Result<Self> {
        let n = eps.len();
        if gens.len() != n.saturating_sub(1) {
            return Err(Error::SizeMismatch(format!("{} reflections for rank {n}", gens.len())));
        }
        for (r, c) in eps.iter().map(|m| (m.rows(), m.cols())).chain(gens.iter().map(|m| (m.rows(), m.cols()))) {
            if r != dim || c != dim {
                return Err(Error::SizeMismatch(format!("{r}x{c} matrix in a module of dimension {dim}")));
            }
        }
        Ok(GradedModule { n, dim, eps, gens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `E_k`, 1-based.
    pub fn eps(&self, k: usize) -> &PkMatrix {
        &self.eps[k - 1]
    }

    pub fn eps_all(&self) -> &[PkMatrix] {
        &self.eps
    }

    pub fn gens(&self) -> &[QMatrix] {
        &self.gens
    }

    /// Replace `E_k` (used to build negative controls).
    pub fn with_eps(&self, k: usize, e: PkMatrix) -> Result<Self> {
        let mut eps = self.eps.clone();
        eps[k - 1] = e;
        GradedModule::new(self.dim, eps, self.gens.clone())
    }

    /// Set `κ = a p + b`.
    pub fn specialize_kappa(&self, a: &BigRational, b: &BigRational) -> Self {
        let eps = self.eps.iter().map(|m| m.map(|c| c.substitute_k(a, b))).collect();
        GradedModule { n: self.n, dim: self.dim, eps, gens: self.gens.clone() }
    }

    /// Numeric module at `p`, `κ`.
    pub fn evaluate(&self, p: f64, kappa: f64) -> NumericGraded {
        NumericGraded {
            n: self.n,
            dim: self.dim,
            p,
            eps: self.eps.iter().map(|m| m.map(|c| c.eval_f64(p, kappa))).collect(),
            gens: self.gens.iter().map(|m| m.map(|c| f64::from_rational(c))).collect(),
        }
    }
}

/// A graded module with numeric `p` and `κ`.
#[derive(Clone, Debug)]
pub struct NumericGraded {
    pub n: usize,
    pub dim: usize,
    pub p: f64,
    pub eps: Vec<Matrix<f64>>,
    pub gens: Vec<Matrix<f64>>,
}

/// `E_k = κ - p X_k` on the seminormal model of `λ`, with `κ` given as an
/// element of `Q[p, k]` (`PkPoly::k()` keeps it symbolic).
pub fn speh_module(lambda: &Partition, kappa: &PkPoly) -> GradedModule {
    let s = specht_module(lambda);
    let n = lambda.size();
    let eps = (1..=n)
        .map(|k| {
            let diag = s
                .jm_contents(k)
                .into_iter()
                .map(|c| kappa.sub(&PkPoly::p().scale(&rat(c, 1))))
                .collect();
            Matrix::diagonal(diag)
        })
        .collect();
    GradedModule { n, dim: s.dim(), eps, gens: s.gens().to_vec() }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GradedReport {
    pub failures: Vec<String>,
}

impl GradedReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exact check of the defining relations: Coxeter relations of the
/// reflections, commuting `ε`'s, and the cross relation.
pub fn check_graded_relations(m: &GradedModule) -> GradedReport {
    let mut rep = GradedReport::default();
    if let Err(e) = check_coxeter(&m.gens, m.dim) {
        rep.failures.push(format!("reflections: {e}"));
    }
    for a in 0..m.n {
        for b in a + 1..m.n {
            if !m.eps[a].commutes_with(&m.eps[b]) {
                rep.failures.push(format!("E_{} E_{} commute", a + 1, b + 1));
            }
        }
    }
    let p_id = PkMatrix::scalar(m.dim, PkPoly::p());
    for j in 1..m.n {
        let t = lift(&m.gens[j - 1]);
        let (ej, ej1) = (&m.eps[j - 1], &m.eps[j]);
        if ej.mul(&t).sub(&t.mul(ej1)) != p_id {
            rep.failures.push(format!("E_{j} t_{j} - t_{j} E_{} = p", j + 1));
        }
        if ej1.mul(&t).sub(&t.mul(ej)) != p_id.neg() {
            rep.failures.push(format!("E_{} t_{j} - t_{j} E_{j} = -p", j + 1));
        }
        for k in (1..=m.n).filter(|&k| k != j && k != j + 1) {
            if !m.eps[k - 1].commutes_with(&t) {
                rep.failures.push(format!("E_{k} t_{j} commute"));
            }
        }
    }
    rep
}

/// `gBZ_i(M)`: the image of the tail sign idempotent with the action of
/// `ε_1..ε_{n-i}` and `t_1..t_{n-i-1}`.
pub fn g_bz_derivative(m: &GradedModule, i: usize) -> Result<GradedModule> {
    if i > m.n {
        return Err(Error::InvalidInput(format!("derivative of order {i} for rank {}", m.n)));
    }
    if i == 0 {
        return Ok(m.clone());
    }
    let iso = sign_isotypic(&m.gens, m.n, i, m.dim).map_err(|e| Error::Consistency(format!("sign part: {e}")))?;
    let eps = m.eps[..m.n - i]
        .iter()
        .map(|e| iso.subspace.restrict_lifted(e, |c| PkPoly::constant(c.clone())))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::Consistency(format!("sign part not ε-stable: {e}")))?;
    GradedModule::new(iso.subspace.dim(), eps, iso.front_gens)
}

/// Read `E_k = κ I - p Y_k` and return the rational `Y_k`.
fn jm_part(e: &PkMatrix, kappa: &PkPoly, k: usize) -> Result<QMatrix> {
    let mut y = Matrix::zeros(e.rows(), e.cols());
    for r in 0..e.rows() {
        for c in 0..e.cols() {
            let mut entry = e.get(r, c).clone();
            if r == c {
                entry = entry.sub(kappa);
            }
            let coeff = entry.coeff(1, 0);
            if entry != PkPoly::p().scale(&coeff) {
                return Err(Error::NotSpehSum(format!("E_{k} entry ({r},{c}) is {} after removing κ", entry.render())));
            }
            y.set(r, c, -coeff);
        }
    }
    Ok(y)
}

fn render_spectrum(poly: &[BigRational]) -> String {
    let parts: Vec<String> = poly.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// The `S_m`-decomposition of a graded module, certified to be a sum of
/// Speh modules with parameter `κ`.
///
/// Checks that `E_1 = κ` and that each `E_k` has `κ - p X_k` shape whose
/// spectrum (as a characteristic polynomial) matches the contents of the
/// claimed summands.
pub fn decompose_as_speh(m: &GradedModule, kappa: &PkPoly) -> Result<Vec<(Partition, usize)>> {
    let dec = decompose_sn(&m.gens, m.n, m.dim)?;
    if m.n == 0 {
        return Ok(dec);
    }
    let expected = |k: usize| -> Vec<BigRational> {
        let mut roots = Vec::new();
        for (lambda, mult) in &dec {
            let contents = specht_module(lambda).jm_contents(k);
            for _ in 0..*mult {
                roots.extend(contents.iter().map(|&c| rat(c, 1)));
            }
        }
        let mut poly = vec![rat(1, 1)];
        for r in roots {
            // multiply by (x - r)
            let mut next = vec![rat(0, 1); poly.len() + 1];
            for (d, c) in poly.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * &r;
            }
            poly = next;
        }
        poly
    };
    for k in 1..=m.n {
        let y = jm_part(&m.eps[k - 1], kappa, k)?;
        if k == 1 && !y.is_zero() {
            return Err(Error::NotSpehSum("E_1 is not κ".into()));
        }
        let (got, want) = (char_poly(&y), expected(k));
        if got != want {
            return Err(Error::NotSpehSum(format!(
                "X_{k} has characteristic polynomial {} but the summands predict {}",
                render_spectrum(&got),
                render_spectrum(&want)
            )));
        }
    }
    Ok(dec)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpehTerm {
    pub shape: Partition,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PieriReport {
    pub shape: Partition,
    pub i: usize,
    pub kappa: String,
    pub predicted: Vec<Partition>,
    pub computed: Vec<SpehTerm>,
    pub dim: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Derive `speh(λ)` `i` times and compare with the vertical strips of `λ`.
pub fn pieri_verify(lambda: &Partition, i: usize, kappa: &PkPoly) -> PieriReport {
    let predicted = lambda.vertical_strips(i);
    let mut report = PieriReport {
        shape: lambda.clone(),
        i,
        kappa: kappa.render(),
        predicted: predicted.clone(),
        computed: Vec::new(),
        dim: 0,
        pass: false,
        error: None,
    };
    let result = g_bz_derivative(&speh_module(lambda, kappa), i).and_then(|d| {
        let dec = decompose_as_speh(&d, kappa)?;
        Ok((d.dim(), dec))
    });
    match result {
        Ok((dim, dec)) => {
            report.dim = dim;
            report.computed = dec.into_iter().map(|(shape, multiplicity)| SpehTerm { shape, multiplicity }).collect();
            let shapes: Vec<&Partition> = report.computed.iter().map(|t| &t.shape).collect();
            let predicted_dim: u64 = predicted.iter().map(hook_dimension).sum();
            report.pass = report.computed.iter().all(|t| t.multiplicity == 1)
                && shapes == predicted.iter().collect::<Vec<_>>()
                && predicted_dim == dim as u64;
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    report
}

/// `pieri_verify` for every `λ ⊢ n ≤ max_n` and `0 ≤ i ≤ n`, in parallel.
pub fn pieri_sweep(max_n: usize, kappa: &PkPoly) -> Vec<PieriReport> {
    let cases: Vec<(Partition, usize)> =
        (0..=max_n).flat_map(|n| Partition::all(n).into_iter().flat_map(move |l| (0..=n).map(move |i| (l.clone(), i)))).collect();
    cases.par_iter().map(|(l, i)| pieri_verify(l, *i, kappa)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn kappa() -> PkPoly {
        PkPoly::k()
    }

    #[test]
    fn small_speh_modules() {
        let k = kappa();
        let m = speh_module(&p("2"), &k);
        assert_eq!(m.dim(), 1);
        assert_eq!(*m.eps(2).get(0, 0), k.sub(&PkPoly::p()));
        let m = speh_module(&p("1,1"), &k);
        assert_eq!(*m.eps(2).get(0, 0), k.add(&PkPoly::p()));
        assert_eq!(*m.gens()[0].get(0, 0), rat(-1, 1));
        let m = speh_module(&p("2,1"), &k);
        let mut e2: Vec<String> = (0..2).map(|r| m.eps(2).get(r, r).render()).collect();
        e2.sort();
        assert_eq!(e2, vec!["k + p", "k - p"]);
    }

    #[test]
    fn relations_and_negative_control() {
        let m = speh_module(&p("2,1"), &kappa());
        assert!(check_graded_relations(&m).passed());
        let perturbed = m.with_eps(1, m.eps(1).add(&PkMatrix::diagonal(vec![PkPoly::one(), PkPoly::zero()]))).unwrap();
        let rep = check_graded_relations(&perturbed);
        assert!(rep.failures.iter().any(|f| f.contains("t_1")));
        assert!(check_graded_relations(&speh_module(&p("1"), &kappa())).passed());
    }

    #[test]
    fn derivatives_of_small_shapes() {
        let k = kappa();
        let d = g_bz_derivative(&speh_module(&p("2,1"), &k), 1).unwrap();
        assert_eq!(decompose_as_speh(&d, &k).unwrap(), vec![(p("1,1"), 1), (p("2"), 1)]);
        let d = g_bz_derivative(&speh_module(&p("2,2"), &k), 2).unwrap();
        assert_eq!(decompose_as_speh(&d, &k).unwrap(), vec![(p("1,1"), 1)]);
        let d = g_bz_derivative(&speh_module(&p("3"), &k), 3).unwrap();
        assert_eq!(d.dim(), 0);
        assert!(decompose_as_speh(&d, &k).unwrap().is_empty());
    }

    #[test]
    fn non_speh_input_is_rejected() {
        let k = kappa();
        let m = speh_module(&p("2,1"), &k);
        let shifted = m.with_eps(1, m.eps(1).add(&PkMatrix::scalar(2, PkPoly::p()))).unwrap();
        assert!(matches!(decompose_as_speh(&shifted, &k), Err(Error::NotSpehSum(_))));
    }

    #[test]
    fn pieri_examples() {
        let k = kappa();
        let r = pieri_verify(&p("2,2"), 2, &k);
        assert!(r.pass);
        assert_eq!(r.computed, vec![SpehTerm { shape: p("1,1"), multiplicity: 1 }]);
        let r = pieri_verify(&p("1,1,1"), 3, &k);
        assert!(r.pass);
        assert_eq!(r.computed, vec![SpehTerm { shape: Partition::empty(), multiplicity: 1 }]);
        let r = pieri_verify(&p("3"), 2, &k);
        assert!(r.pass && r.computed.is_empty());
    }

    #[test]
    fn kappa_specialization() {
        let m = speh_module(&p("2"), &kappa()).specialize_kappa(&rat(1, 2), &rat(0, 1));
        assert_eq!(*m.eps(2).get(0, 0), PkPoly::p().scale(&rat(-1, 2)));
        let num = m.evaluate(2.0, 0.0);
        assert_eq!(*num.eps[1].get(0, 0), -1.0);
    }
}
