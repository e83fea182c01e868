//! Finite-dimensional modules over the affine Hecke algebra and its Levi
//! subalgebras.
//!
//! A module over `H_{n_1} ⊗ .. ⊗ H_{n_m}` (a Levi subalgebra of `H_n`) is
//! stored with all `n` matrices `Θ_k` and the matrices `T_j` for the simple
//! reflections inside the blocks. A plain `H_n`-module is the case of one
//! block.

use std::fmt;

use serde_json::{json, Value};

use super::affine::{delta, reflect, AffineElement};
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::linalg::{inverse, Matrix};
use crate::scalar::{Field, QRational};

/// Scalars a module can be written over: `Q(q)` exactly, or `f64` at a
/// numeric value of `q`.
pub trait HeckeScalar: Field {
    /// Image of a coefficient in `Q(q)` when the parameter is `q`.
    fn from_hecke(c: &QRational, q: &Self) -> Result<Self>;
    /// Size used for residuals: `0` or `1` in exact mode, `|x|` numerically.
    fn magnitude(&self) -> f64;
    fn invert(m: &Matrix<Self>) -> Result<Matrix<Self>>;
    fn to_json(&self) -> Value;
    fn mode() -> &'static str;
}

impl HeckeScalar for QRational {
    fn from_hecke(c: &QRational, q: &Self) -> Result<Self> {
        if *q == QRational::q() {
            return Ok(c.clone());
        }
        match q.as_rational() {
            Some(r) => c.specialize(&r).map(QRational::from_rational),
            None => Err(Error::InvalidInput(format!("parameter {q} is neither q nor a rational"))),
        }
    }

    fn magnitude(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            1.0
        }
    }

    fn invert(m: &Matrix<Self>) -> Result<Matrix<Self>> {
        inverse(m)
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn mode() -> &'static str {
        "exact"
    }
}

impl HeckeScalar for f64 {
    fn from_hecke(c: &QRational, q: &Self) -> Result<Self> {
        c.eval_f64(*q)
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }

    fn invert(m: &Matrix<Self>) -> Result<Matrix<Self>> {
        crate::linalg::numeric::inverse(m)
    }

    fn to_json(&self) -> Value {
        json!(self)
    }

    fn mode() -> &'static str {
        "numeric"
    }
}

/// `max |a - b| / max(1, max |a|, max |b|)`; exact mode gives 0 or 1.
pub fn residual<F: HeckeScalar>(a: &Matrix<F>, b: &Matrix<F>) -> f64 {
    let scale = a.entries().chain(b.entries()).map(|x| x.magnitude()).fold(1.0, f64::max);
    let diff = a.sub(b);
    diff.entries().map(|x| x.magnitude()).fold(0.0, f64::max) / scale
}

/// Outcome of a relation check: the worst residual and the relations that
/// exceeded the tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport {
    pub max_residual: f64,
    pub tol: f64,
    pub failures: Vec<String>,
}

impl RelationReport {
    fn new(tol: f64) -> Self {
        RelationReport { max_residual: 0.0, tol, failures: Vec::new() }
    }

    fn record(&mut self, name: impl FnOnce() -> String, r: f64) {
        self.max_residual = self.max_residual.max(r);
        if r > self.tol {
            self.failures.push(name());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        match self.failures.first() {
            None => Ok(()),
            Some(rel) => Err(Error::Residual { relation: rel.clone(), residual: self.max_residual, tol: self.tol }),
        }
    }
}

#[derive(Clone)]
pub struct AffineModule<F> {
    n: usize,
    dim: usize,
    q: F,
    blocks: Vec<usize>,
    theta: Vec<Matrix<F>>,
    theta_inv: Vec<Matrix<F>>,
    tee: Vec<Option<Matrix<F>>>,
    tol: f64,
}

impl<F: HeckeScalar> fmt::Debug for AffineModule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AffineModule")
            .field("n", &self.n)
            .field("dim", &self.dim)
            .field("blocks", &self.blocks)
            .field("theta", &self.theta)
            .field("tee", &self.tee)
            .finish()
    }
}

pub type ExactModule = AffineModule<QRational>;
pub type NumericModule = AffineModule<f64>;

fn block_boundaries(blocks: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    let mut out = Vec::new();
    for &b in blocks.iter().take(blocks.len().saturating_sub(1)) {
        acc += b;
        out.push(acc);
    }
    out
}

impl<F: HeckeScalar> AffineModule<F> {
    /// Module over `H_n` from `Θ_1..Θ_n` and `T_1..T_{n-1}`.
    pub fn new(q: F, dim: usize, theta: Vec<Matrix<F>>, tee: Vec<Matrix<F>>, tol: f64) -> Result<Self> {
        let n = theta.len();
        if tee.len() != n.saturating_sub(1) {
            return Err(Error::SizeMismatch(format!("{} T-matrices for rank {n}", tee.len())));
        }
        let blocks = if n == 0 { vec![] } else { vec![n] };
        AffineModule::levi(q, dim, blocks, theta, tee.into_iter().map(Some).collect(), tol)
    }

    /// Module over the Levi subalgebra with the given block sizes; `tee[j-1]`
    /// must be `None` exactly when `j` is a block boundary.
    pub fn levi(
        q: F,
        dim: usize,
        blocks: Vec<usize>,
        theta: Vec<Matrix<F>>,
        tee: Vec<Option<Matrix<F>>>,
        tol: f64,
    ) -> Result<Self> {
        let n = theta.len();
        if blocks.iter().sum::<usize>() != n || blocks.contains(&0) {
            return Err(Error::InvalidComposition { n, parts: blocks });
        }
        if tee.len() != n.saturating_sub(1) {
            return Err(Error::SizeMismatch(format!("{} T-slots for rank {n}", tee.len())));
        }
        let bounds = block_boundaries(&blocks);
        for (idx, t) in tee.iter().enumerate() {
            if t.is_some() == bounds.contains(&(idx + 1)) {
                return Err(Error::InvalidInput(format!("T_{} does not match the block structure", idx + 1)));
            }
        }
        for m in theta.iter().chain(tee.iter().flatten()) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::SizeMismatch(format!("{}x{} matrix in a module of dimension {dim}", m.rows(), m.cols())));
            }
        }
        let theta_inv = theta.iter().map(F::invert).collect::<Result<Vec<_>>>()?;
        Ok(AffineModule { n, dim, q, blocks, theta, theta_inv, tee, tol })
    }

    /// The module of dimension `dim` over `H_0 = C`.
    pub fn rank_zero(q: F, dim: usize, tol: f64) -> Self {
        AffineModule { n: 0, dim, q, blocks: vec![], theta: vec![], theta_inv: vec![], tee: vec![], tol }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn is_levi(&self) -> bool {
        self.blocks.len() > 1
    }

    pub fn theta(&self, k: usize) -> &Matrix<F> {
        &self.theta[k - 1]
    }

    pub fn thetas(&self) -> &[Matrix<F>] {
        &self.theta
    }

    pub fn theta_inv(&self, k: usize) -> &Matrix<F> {
        &self.theta_inv[k - 1]
    }

    /// `T_j`, absent at block boundaries.
    pub fn tee(&self, j: usize) -> Option<&Matrix<F>> {
        self.tee[j - 1].as_ref()
    }

    pub fn tees(&self) -> &[Option<Matrix<F>>] {
        &self.tee
    }

    /// `Θ^x = prod Θ_k^{x_k}`.
    pub fn theta_pow(&self, x: &[i64]) -> Matrix<F> {
        let mut acc = Matrix::identity(self.dim);
        for (k, &e) in x.iter().enumerate() {
            let base = if e < 0 { &self.theta_inv[k] } else { &self.theta[k] };
            for _ in 0..e.unsigned_abs() {
                acc = acc.mul(base);
            }
        }
        acc
    }

    /// `T_w` along a reduced word; fails if a letter is missing.
    pub fn t_word(&self, w: &Permutation) -> Result<Matrix<F>> {
        let mut acc = Matrix::identity(self.dim);
        for j in w.reduced_word() {
            let t = self.tee(j).ok_or_else(|| Error::InvalidInput(format!("T_{j} is not in the Levi subalgebra")))?;
            acc = acc.mul(t);
        }
        Ok(acc)
    }

    /// Matrix of an element `sum c θ_x T_w`.
    pub fn act(&self, h: &AffineElement) -> Result<Matrix<F>> {
        if h.n() != self.n {
            return Err(Error::RankMismatch(h.n(), self.n));
        }
        let mut out = Matrix::zeros(self.dim, self.dim);
        for ((x, w), c) in h.terms() {
            let c = F::from_hecke(c, &self.q)?;
            out = out.add(&self.theta_pow(x).mul(&self.t_word(w)?).scale(&c));
        }
        Ok(out)
    }

    /// Residuals of all defining relations of the (Levi) algebra.
    ///
    /// The cross relation is checked for `x = e_k`; the others follow since
    /// both sides are multiplicative in `θ`.
    pub fn verify_relations(&self) -> RelationReport {
        let mut rep = RelationReport::new(self.tol);
        let id = Matrix::identity(self.dim);
        let one = F::one();
        for a in 0..self.n {
            rep.record(|| format!("Θ_{} invertible", a + 1), residual(&self.theta[a].mul(&self.theta_inv[a]), &id));
            for b in a + 1..self.n {
                let (x, y) = (&self.theta[a], &self.theta[b]);
                rep.record(|| format!("Θ_{} Θ_{} commute", a + 1, b + 1), residual(&x.mul(y), &y.mul(x)));
            }
        }
        let qm1 = self.q.sub(&one);
        for j in 1..self.n {
            let Some(t) = self.tee(j) else { continue };
            let quad = t.add_scalar(&one).mul(&t.add_scalar(&self.q.neg()));
            rep.record(|| format!("quadratic T_{j}"), residual(&quad, &Matrix::zeros(self.dim, self.dim)));
            for k in j + 1..self.n {
                let Some(u) = self.tee(k) else { continue };
                let (l, r) = if k == j + 1 { (t.mul(u).mul(t), u.mul(t).mul(u)) } else { (t.mul(u), u.mul(t)) };
                rep.record(|| format!("braid T_{j} T_{k}"), residual(&l, &r));
            }
            for k in 0..self.n {
                let mut x = vec![0; self.n];
                x[k] = 1;
                let lhs = t.mul(&self.theta[k]);
                let mut rhs = self.theta_pow(&reflect(&x, j)).mul(t);
                for (sign, y) in delta(&x, j) {
                    rhs = rhs.add(&self.theta_pow(&y).scale(&qm1.mul(&F::from_i64(sign))));
                }
                rep.record(|| format!("cross T_{j} Θ_{}", k + 1), residual(&lhs, &rhs));
            }
        }
        rep
    }

    /// Direct sum of modules over the same algebra.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.blocks != other.blocks {
            return Err(Error::InvalidInput("direct sum of modules over different algebras".into()));
        }
        let theta = self.theta.iter().zip(&other.theta).map(|(a, b)| Matrix::block_diag(&[a.clone(), b.clone()])).collect();
        let tee = self
            .tee
            .iter()
            .zip(&other.tee)
            .map(|(a, b)| match (a, b) {
                (Some(a), Some(b)) => Some(Matrix::block_diag(&[a.clone(), b.clone()])),
                _ => None,
            })
            .collect();
        let dim = self.dim + other.dim;
        if self.n == 0 {
            return Ok(AffineModule::rank_zero(self.q.clone(), dim, self.tol));
        }
        AffineModule::levi(self.q.clone(), dim, self.blocks.clone(), theta, tee, self.tol)
    }

    /// `M_1 ⊠ M_2` over `H_{n_1} ⊗ H_{n_2}` (blocks concatenated).
    pub fn external_tensor(&self, other: &Self) -> Result<Self> {
        let (d1, d2) = (self.dim, other.dim);
        let (i1, i2) = (Matrix::identity(d1), Matrix::identity(d2));
        let mut theta: Vec<Matrix<F>> = self.theta.iter().map(|m| m.kron(&i2)).collect();
        theta.extend(other.theta.iter().map(|m| i1.kron(m)));
        let mut tee: Vec<Option<Matrix<F>>> = self.tee.iter().map(|m| m.as_ref().map(|m| m.kron(&i2))).collect();
        if self.n > 0 && other.n > 0 {
            tee.push(None);
        }
        tee.extend(other.tee.iter().map(|m| m.as_ref().map(|m| i1.kron(m))));
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().copied());
        if blocks.is_empty() {
            return Ok(AffineModule::rank_zero(self.q.clone(), d1 * d2, self.tol));
        }
        AffineModule::levi(self.q.clone(), d1 * d2, blocks, theta, tee, self.tol)
    }

    /// Convert every entry, e.g. to evaluate at a numeric `q`.
    pub fn map_scalars<G: HeckeScalar>(&self, q: G, tol: f64, f: impl Fn(&F) -> Result<G>) -> Result<AffineModule<G>> {
        let conv = |m: &Matrix<F>| -> Result<Matrix<G>> {
            let rows = m.row_vecs().iter().map(|r| r.iter().map(&f).collect::<Result<Vec<G>>>()).collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_rows(rows))
        };
        let theta = self.theta.iter().map(conv).collect::<Result<Vec<_>>>()?;
        let tee = self.tee.iter().map(|m| m.as_ref().map(conv).transpose()).collect::<Result<Vec<_>>>()?;
        if self.n == 0 {
            return Ok(AffineModule::rank_zero(q, self.dim, tol));
        }
        AffineModule::levi(q, self.dim, self.blocks.clone(), theta, tee, tol)
    }

    /// `{n, dim, blocks, theta, tee, scalar_mode}`; missing `T_j` are `null`.
    pub fn to_json(&self) -> Value {
        let mat = |m: &Matrix<F>| -> Value {
            Value::Array(m.row_vecs().iter().map(|r| Value::Array(r.iter().map(|x| x.to_json()).collect())).collect())
        };
        json!({
            "n": self.n,
            "dim": self.dim,
            "blocks": self.blocks,
            "theta": self.theta.iter().map(mat).collect::<Vec<_>>(),
            "tee": self.tee.iter().map(|m| m.as_ref().map(mat).unwrap_or(Value::Null)).collect::<Vec<_>>(),
            "scalar_mode": F::mode(),
        })
    }
}

impl ExactModule {
    /// Exact module over `H_n` with formal `q`.
    pub fn exact(dim: usize, theta: Vec<Matrix<QRational>>, tee: Vec<Matrix<QRational>>) -> Result<Self> {
        AffineModule::new(QRational::q(), dim, theta, tee, 0.0)
    }

    /// One-dimensional module `Θ_k = t_k`, every `T_j = ε` with `ε ∈ {q, -1}`.
    pub fn character(t: &[QRational], sign: bool) -> Result<Self> {
        if t.is_empty() {
            return Ok(AffineModule::rank_zero(QRational::q(), 1, 0.0));
        }
        let eps = if sign { QRational::from_int(-1) } else { QRational::q() };
        let theta = t.iter().map(|c| Matrix::scalar(1, c.clone())).collect();
        let tee = (1..t.len()).map(|_| Matrix::scalar(1, eps.clone())).collect();
        let m = ExactModule::exact(1, theta, tee)?;
        m.verify_relations().into_result()?;
        Ok(m)
    }

    /// Specialize `q` to a float.
    pub fn to_numeric(&self, q0: f64, tol: f64) -> Result<NumericModule> {
        self.map_scalars(q0, tol, |x| x.eval_f64(q0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> QRational {
        QRational::from_int(v)
    }

    #[test]
    fn one_dimensional_characters() {
        let q = QRational::q();
        // T = -1 needs t_2 = q t_1, T = q needs t_1 = q t_2
        let steinberg = ExactModule::character(&[r(1), q.clone()], true).unwrap();
        assert!(steinberg.verify_relations().passed());
        let trivial = ExactModule::character(&[q.clone(), r(1)], false).unwrap();
        assert_eq!(trivial.dim(), 1);
        assert!(ExactModule::character(&[r(1), r(2)], true).is_err());
    }

    #[test]
    fn act_matches_generators() {
        let q = QRational::q();
        let m = ExactModule::character(&[r(2), q.mul(&r(2))], true).unwrap();
        let h: AffineElement = "th[(1,-1)] * T[2 1]".parse().unwrap();
        let a = m.act(&h).unwrap();
        // θ_{(1,-1)} acts by 2 / (2q), T by -1
        assert_eq!(*a.get(0, 0), q.inv().unwrap().neg());
    }

    #[test]
    fn tensor_and_sum() {
        let a = ExactModule::character(&[r(3)], false).unwrap();
        let b = ExactModule::character(&[r(5)], true).unwrap();
        let ab = a.external_tensor(&b).unwrap();
        assert_eq!(ab.blocks(), &[1, 1]);
        assert!(ab.tee(1).is_none());
        assert!(ab.verify_relations().passed());
        let s = ab.direct_sum(&ab).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.act(&AffineElement::t_simple(2, 1)).is_err());
    }

    #[test]
    fn broken_cross_relation_is_reported() {
        let theta = vec![Matrix::scalar(1, r(1)), Matrix::scalar(1, r(1))];
        let m = ExactModule::exact(1, theta, vec![Matrix::scalar(1, r(-1))]).unwrap();
        let rep = m.verify_relations();
        assert!(!rep.passed());
        assert!(rep.failures.iter().all(|f| f.starts_with("cross")));
    }
}
