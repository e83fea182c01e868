//! Numerical form of Lusztig's reduction from graded to affine Hecke
//! modules, and the comparison of the two derivative functors across it.
//!
//! For a graded module with real `ε`-spectra, `Λ` sets
//!
//! ```text
//! Θ_k = exp(E_k),    T_j + 1 = (t_j + 1) Fc(E_j - E_{j+1}),
//! Fc(x) = x / (e^x - 1) * (q0 e^x - 1) / (x + p),    p = ln q0.
//! ```
//!
//! With `φ(u) = (e^u - 1) / u` this is `Fc(x) = φ(x + p) / φ(x)`; `φ` is
//! entire and has no real zeros, so both removable singularities of the
//! defining expression (at `0` and `-p`) are absorbed.

use nalgebra::{Complex, DMatrix};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{g_bz_derivative, GradedModule, NumericGraded};
use crate::hecke::{tail_sign_matrix, AffineModule, NumericModule, RelationReport};
use crate::linalg::numeric::{self, from_na, to_na};
use crate::linalg::{elementary_symmetric, Matrix};
use crate::symgroup::sign_isotypic;

/// Truncated Taylor series `sum c_k t^k`.
#[derive(Clone, Debug, PartialEq)]
struct Series(Vec<f64>);

impl Series {
    fn mul(&self, other: &Series) -> Series {
        let n = self.0.len();
        Series((0..n).map(|k| (0..=k).map(|j| self.0[j] * other.0[k - j]).sum()).collect())
    }

    fn recip(&self) -> Result<Series> {
        let a0 = self.0[0];
        if a0 == 0.0 {
            return Err(Error::Singularity(0.0));
        }
        let mut out = vec![0.0; self.0.len()];
        out[0] = 1.0 / a0;
        for k in 1..self.0.len() {
            let s: f64 = (1..=k).map(|j| self.0[j] * out[k - j]).sum();
            out[k] = -s / a0;
        }
        Ok(Series(out))
    }
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|v| v as f64).product()
}

/// Taylor coefficients of `e^u` at `u0`.
fn exp_series(u0: f64, order: usize) -> Series {
    let e = u0.exp();
    Series((0..order).map(|k| e / factorial(k)).collect())
}

/// Taylor coefficients of `φ(u) = (e^u - 1)/u` at `u0`.
fn phi_series(u0: f64, order: usize) -> Result<Series> {
    if u0.abs() <= 1.0 {
        // φ^{(m)}(u0)/m! = sum_{k>=m} C(k,m) u0^{k-m} / (k+1)!
        let coeffs = (0..order)
            .map(|m| {
                let mut acc = 0.0;
                let mut binom = 1.0;
                let mut pow = 1.0;
                for k in m..m + 60 {
                    acc += binom * pow / factorial(k + 1);
                    binom = binom * (k + 1) as f64 / (k + 1 - m) as f64;
                    pow *= u0;
                }
                acc
            })
            .collect();
        return Ok(Series(coeffs));
    }
    // (e^{u0} e^t - 1) / (u0 + t)
    let mut num = exp_series(u0, order);
    num.0[0] -= 1.0;
    let mut den = vec![0.0; order];
    den[0] = u0;
    if order > 1 {
        den[1] = 1.0;
    }
    Ok(num.mul(&Series(den).recip()?))
}

#[derive(Clone, Debug, PartialEq)]
enum Kind {
    Exp,
    /// `x / (e^x - 1)`.
    Bernoulli,
    /// `Fc` for `p = ln q0`.
    Correction { p: f64 },
    /// `1 / x`, kept for its genuine pole.
    Reciprocal,
}

/// A real function with known Taylor expansions, including at its
/// removable singularities.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralFunction {
    kind: Kind,
}

impl SpectralFunction {
    pub fn exp() -> Self {
        SpectralFunction { kind: Kind::Exp }
    }

    pub fn bernoulli() -> Self {
        SpectralFunction { kind: Kind::Bernoulli }
    }

    pub fn correction(q0: f64) -> Self {
        SpectralFunction { kind: Kind::Correction { p: q0.ln() } }
    }

    pub fn reciprocal() -> Self {
        SpectralFunction { kind: Kind::Reciprocal }
    }

    /// `(point, limit)` for each removable singularity of the defining expression.
    pub fn removable_singularities(&self) -> Vec<(f64, f64)> {
        match self.kind {
            Kind::Exp | Kind::Reciprocal => vec![],
            Kind::Bernoulli => vec![(0.0, 1.0)],
            Kind::Correction { p } => {
                let q0 = p.exp();
                vec![(0.0, (q0 - 1.0) / p), (-p, p * q0 / (q0 - 1.0))]
            }
        }
    }

    pub fn poles(&self) -> Vec<f64> {
        match self.kind {
            Kind::Reciprocal => vec![0.0],
            _ => vec![],
        }
    }

    /// The defining expression, undefined (NaN or infinite) at singular points.
    pub fn naive(&self, x: f64) -> f64 {
        match self.kind {
            Kind::Exp => x.exp(),
            Kind::Bernoulli => x / (x.exp() - 1.0),
            Kind::Correction { p } => x / (x.exp() - 1.0) * (p.exp() * x.exp() - 1.0) / (x + p),
            Kind::Reciprocal => 1.0 / x,
        }
    }

    /// First `order` Taylor coefficients at `c`.
    pub fn taylor(&self, c: f64, order: usize) -> Result<Vec<f64>> {
        let s = match self.kind {
            Kind::Exp => exp_series(c, order),
            Kind::Bernoulli => phi_series(c, order)?.recip()?,
            Kind::Correction { p } => phi_series(c + p, order)?.mul(&phi_series(c, order)?.recip()?),
            Kind::Reciprocal => {
                if c == 0.0 {
                    return Err(Error::Singularity(c));
                }
                Series((0..order).map(|k| (-1f64).powi(k as i32) / c.powi(k as i32 + 1)).collect())
            }
        };
        Ok(s.0)
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        Ok(self.taylor(x, 1)?[0])
    }
}

/// Above this condition number of the eigenspace basis, the two nearest
/// clusters are merged.
const MAX_BASIS_CONDITION: f64 = 1e5;
/// Clusters further apart than this (relative) are never merged.
const MAX_MERGE_GAP: f64 = 1e-2;

/// Connected components of the eigenvalues in `idx` at distance `r`.
fn components(eig: &[Complex<f64>], idx: &[usize], r: f64) -> Vec<Vec<usize>> {
    let mut seen = vec![false; idx.len()];
    let mut out = Vec::new();
    for s in 0..idx.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            let a = eig[idx[comp[k]]];
            for (t, flag) in seen.iter_mut().enumerate() {
                if !*flag && (eig[idx[t]] - a).norm() <= r {
                    *flag = true;
                    comp.push(t);
                }
            }
            k += 1;
        }
        out.push(comp.into_iter().map(|t| idx[t]).collect());
    }
    out
}

/// Eigenvalues grouped into clusters `(center, size)`, sorted by center;
/// the spectrum must be real up to the cluster radius.
///
/// A Jordan block of size `k` splits under rounding by about `ε^{1/k}`, so
/// a group of `k` eigenvalues may be merged within radius
/// `max(cluster_tol, (10^4 ε)^{1/k})`, capped at `MAX_MERGE_GAP` (all
/// relative). Groups are formed from the largest `k` down.
fn real_clusters(a: &Matrix<f64>, cluster_tol: f64) -> Result<Vec<(f64, usize)>> {
    let eig = numeric::eigenvalues(a);
    let scale = eig.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let radius = |k: usize| scale * cluster_tol.max((1e4 * f64::EPSILON).powf(1.0 / k as f64)).min(MAX_MERGE_GAP);
    let mut rest: Vec<usize> = (0..eig.len()).collect();
    let mut out = Vec::new();
    for k in (1..=eig.len()).rev() {
        let mut keep = Vec::new();
        for comp in components(&eig, &rest, radius(k)) {
            if comp.len() >= k {
                let size = comp.len();
                let center = comp.iter().map(|&t| eig[t]).sum::<Complex<f64>>() / size as f64;
                if center.im.abs() > radius(size) {
                    return Err(Error::InvalidInput(format!("non-real eigenvalue {} + {}i", center.re, center.im)));
                }
                out.push((center.re, size));
            } else {
                keep.extend(comp);
            }
        }
        rest = keep;
    }
    out.sort_by(|x, y| x.0.total_cmp(&y.0));
    Ok(out)
}

/// Columns spanning the generalized eigenspace of each cluster, in order.
fn eigenspace_basis(a: &DMatrix<f64>, clusters: &[(f64, usize)]) -> DMatrix<f64> {
    let n = a.nrows();
    let id = DMatrix::<f64>::identity(n, n);
    let mut cols: Vec<nalgebra::DVector<f64>> = Vec::with_capacity(n);
    for &(c, m) in clusters {
        let shifted = a - &id * c;
        let mut pow = id.clone();
        for _ in 0..m {
            pow = &pow * &shifted;
        }
        let svd = pow.svd(false, true);
        let vt = svd.v_t.expect("right singular vectors requested");
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&x, &y| svd.singular_values[x].total_cmp(&svd.singular_values[y]));
        cols.extend(order.iter().take(m).map(|&k| vt.row(k).transpose()));
    }
    DMatrix::from_columns(&cols)
}

fn condition(v: &DMatrix<f64>) -> f64 {
    let sv = v.singular_values();
    let (lo, hi) = sv.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), &x| (lo.min(x), hi.max(x)));
    hi / lo
}

/// `F(A)` by functional calculus on generalized eigenspaces.
///
/// Eigenvalues are clustered as in `real_clusters`; each cluster's
/// generalized eigenspace is the span of the right singular vectors of
/// `(A - cI)^m` for the `m` smallest singular values, `m` its size. On it,
/// `F` is the Taylor polynomial at `c` of order `m + 2`. If the assembled
/// basis is still ill-conditioned, the nearest clusters are merged.
pub fn matrix_function(f: &SpectralFunction, a: &Matrix<f64>, cluster_tol: f64) -> Result<Matrix<f64>> {
    let n = a.rows();
    if n == 0 {
        return Ok(a.clone());
    }
    let na = to_na(a);
    let scale = na.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    let mut clusters = real_clusters(a, cluster_tol)?;
    let v = loop {
        let v = eigenspace_basis(&na, &clusters);
        if clusters.len() == 1 || condition(&v) <= MAX_BASIS_CONDITION {
            break v;
        }
        let (k, gap) = (0..clusters.len() - 1)
            .map(|k| (k, clusters[k + 1].0 - clusters[k].0))
            .min_by(|x, y| x.1.total_cmp(&y.1))
            .expect("at least two clusters");
        if gap > MAX_MERGE_GAP * scale {
            return Err(Error::Consistency(format!("eigenspace basis has condition {:e}", condition(&v))));
        }
        let ((c1, m1), (c2, m2)) = (clusters[k], clusters[k + 1]);
        clusters[k] = ((c1 * m1 as f64 + c2 * m2 as f64) / (m1 + m2) as f64, m1 + m2);
        clusters.remove(k + 1);
    };
    let v_inv = v.clone().try_inverse().ok_or_else(|| Error::Consistency("generalized eigenspaces are dependent".into()))?;
    let b = &v_inv * &na * &v;
    let mut out = DMatrix::<f64>::zeros(n, n);
    let mut start = 0;
    for &(c, m) in &clusters {
        if f.poles().iter().any(|&s| (c - s).abs() <= cluster_tol * s.abs().max(1.0)) {
            return Err(Error::Singularity(c));
        }
        let block = b.view((start, start), (m, m)).into_owned();
        let shifted = &block - DMatrix::<f64>::identity(m, m) * c;
        let coeffs = f.taylor(c, m + 2)?;
        let mut pow = DMatrix::<f64>::identity(m, m);
        let mut acc = DMatrix::<f64>::zeros(m, m);
        for ck in coeffs {
            acc += &pow * ck;
            pow = &pow * &shifted;
        }
        out.view_mut((start, start), (m, m)).copy_from(&acc);
        start += m;
    }
    Ok(from_na(&(&v * out * v_inv)))
}

/// How the correction factor is combined with `t_j + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorOrder {
    /// `(t_j + 1) Fc(A_j)`: `Fc` is applied to vectors first.
    CorrectionFirst,
    /// `Fc(A_j) (t_j + 1)`. Both algebras have an anti-involution fixing
    /// their generators, and conjugating by them turns one order into the
    /// other, so this also gives a module.
    CorrectionLast,
    /// `(t_j + 1) Fc(-A_j)`, which does not give a module.
    Reflected,
}

/// Numerical parameters of the bridge.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BridgeParams {
    pub q0: f64,
    pub tol: f64,
    pub cluster_tol: f64,
}

impl Default for BridgeParams {
    fn default() -> Self {
        BridgeParams { q0: 4.0, tol: 1e-8, cluster_tol: 1e-9 }
    }
}

/// `Λ(M)` without the relation check.
pub fn lambda_unchecked(m: &NumericGraded, params: &BridgeParams, order: FactorOrder) -> Result<NumericModule> {
    let p = params.q0.ln();
    if params.q0 <= 1.0 || (m.p - p).abs() > 1e-12 * p.abs().max(1.0) {
        return Err(Error::InvalidInput(format!("graded module has p = {} but ln q0 = {p}", m.p)));
    }
    let exp = SpectralFunction::exp();
    let fc = SpectralFunction::correction(params.q0);
    let theta = m.eps.iter().map(|e| matrix_function(&exp, e, params.cluster_tol)).collect::<Result<Vec<_>>>()?;
    let id = Matrix::identity(m.dim);
    let tee = (1..m.n)
        .map(|j| {
            let a = m.eps[j - 1].sub(&m.eps[j]);
            let f = matrix_function(&fc, &a, params.cluster_tol)?;
            let t1 = m.gens[j - 1].add(&id);
            let prod = match order {
                FactorOrder::CorrectionFirst => t1.mul(&f),
                FactorOrder::CorrectionLast => f.mul(&t1),
                FactorOrder::Reflected => t1.mul(&matrix_function(&fc, &a.scale(&-1.0), params.cluster_tol)?),
            };
            Ok(prod.sub(&id))
        })
        .collect::<Result<Vec<_>>>()?;
    if m.n == 0 {
        return Ok(AffineModule::rank_zero(params.q0, m.dim, params.tol));
    }
    AffineModule::new(params.q0, m.dim, theta, tee, params.tol)
}

/// `Λ(M)`; fails with the residual report if the relations do not hold.
pub fn lambda_functor(m: &NumericGraded, params: &BridgeParams) -> Result<NumericModule> {
    let out = lambda_unchecked(m, params, FactorOrder::CorrectionFirst)?;
    out.verify_relations().into_result()?;
    Ok(out)
}

/// Largest relative gap between the spectrum of `Θ_k` and `exp` of the
/// spectrum of `E_k`, over all `k`.
pub fn theta_spectrum_deviation(m: &NumericGraded, lam: &NumericModule) -> f64 {
    let mut worst: f64 = 0.0;
    for k in 0..m.n {
        let mut want: Vec<f64> = numeric::eigenvalues(&m.eps[k]).iter().map(|z| z.re.exp()).collect();
        let mut got: Vec<f64> = numeric::eigenvalues(lam.theta(k + 1)).iter().map(|z| z.re).collect();
        want.sort_by(f64::total_cmp);
        got.sort_by(f64::total_cmp);
        for (a, b) in want.iter().zip(&got) {
            worst = worst.max((a - b).abs() / a.abs().max(1.0));
        }
    }
    worst
}

/// Numeric `BZ_i`: orthonormal basis of the projector image, front
/// generators compressed onto it.
pub fn bz_numeric(m: &NumericModule, i: usize) -> Result<NumericModule> {
    if i == 0 {
        return Ok(m.clone());
    }
    let proj = tail_sign_matrix(m, i)?;
    let basis = numeric::image(&proj, m.tol());
    let r = m.n() - i;
    let dim = basis.ncols();
    let mut worst: f64 = 0.0;
    let mut compress = |a: &Matrix<f64>| {
        let (c, res) = numeric::restrict(&basis, a);
        worst = worst.max(res);
        c
    };
    let theta: Vec<Matrix<f64>> = (1..=r).map(|k| compress(m.theta(k))).collect();
    let tee: Vec<Matrix<f64>> = (1..r).map(|j| compress(m.tee(j).expect("full module"))).collect();
    if worst > m.tol() {
        return Err(Error::Residual { relation: "invariance of the derivative subspace".into(), residual: worst, tol: m.tol() });
    }
    if r == 0 {
        return Ok(AffineModule::rank_zero(*m.q(), dim, m.tol()));
    }
    AffineModule::new(*m.q(), dim, theta, tee, m.tol())
}

fn sorted_real_spectrum(a: &Matrix<f64>) -> Vec<f64> {
    let mut v: Vec<f64> = numeric::eigenvalues(a).iter().map(|z| z.re).collect();
    v.sort_by(f64::total_cmp);
    v
}

/// Sorted spectra of `Θ_1..Θ_n` followed by those of `e_1(Θ)..e_n(Θ)`.
pub fn spectral_fingerprint(m: &NumericModule) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = m.thetas().iter().map(sorted_real_spectrum).collect();
    if m.n() > 0 {
        let e = elementary_symmetric(m.thetas(), m.dim());
        out.extend(e[1..].iter().map(sorted_real_spectrum));
    }
    out
}

fn fingerprints_match(a: &[Vec<f64>], b: &[Vec<f64>], tol: f64) -> bool {
    a.len() == b.len()
        && a.iter().zip(b).all(|(x, y)| {
            x.len() == y.len() && x.iter().zip(y).all(|(u, v)| (u - v).abs() <= tol * u.abs().max(v.abs()).max(1.0))
        })
}

#[derive(Clone, Debug, Serialize)]
pub struct BridgeReport {
    pub input: String,
    pub q0: f64,
    pub kappa: f64,
    pub i: usize,
    pub dims: [usize; 2],
    pub fingerprint_match: bool,
    pub max_residual: f64,
    pub pass: bool,
}

/// `BZ_i(Λ(M))` against `Λ(gBZ_i(M))` at `κ = kappa_over_p * p`.
///
/// Both sides are certified by their relation residuals and compared by
/// dimension and by the spectra of `Θ_k` and of `e_r(Θ)`, within `tol`.
pub fn bridge_bz_compare(
    input: &str,
    m: &GradedModule,
    kappa_over_p: f64,
    i: usize,
    params: &BridgeParams,
    tol: f64,
) -> Result<BridgeReport> {
    let p = params.q0.ln();
    let kappa = kappa_over_p * p;
    let left = bz_numeric(&lambda_functor(&m.evaluate(p, kappa), params)?, i)?;
    let right = lambda_functor(&g_bz_derivative(m, i)?.evaluate(p, kappa), params)?;
    let reports: [RelationReport; 2] = [left.verify_relations(), right.verify_relations()];
    let max_residual = reports.iter().map(|r| r.max_residual).fold(0.0, f64::max);
    let fingerprint_match = left.dim() == right.dim()
        && fingerprints_match(&spectral_fingerprint(&left), &spectral_fingerprint(&right), tol);
    let pass = fingerprint_match && reports.iter().all(RelationReport::passed);
    Ok(BridgeReport {
        input: input.to_string(),
        q0: params.q0,
        kappa,
        i,
        dims: [left.dim(), right.dim()],
        fingerprint_match,
        max_residual,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SignDimReport {
    pub input: String,
    pub q0: f64,
    pub kappa: f64,
    pub i: usize,
    /// `[graded sign-isotypic dimension, rank of S on Λ(M)]`.
    pub dims: [usize; 2],
    pub pass: bool,
}

/// Compare the sign part of the last `i` letters on both sides of `Λ`.
pub fn sign_dim_compare(input: &str, m: &GradedModule, kappa_over_p: f64, i: usize, params: &BridgeParams) -> Result<SignDimReport> {
    let p = params.q0.ln();
    let kappa = kappa_over_p * p;
    let graded = sign_isotypic(m.gens(), m.n(), i, m.dim())?.subspace.dim();
    let lam = lambda_functor(&m.evaluate(p, kappa), params)?;
    let affine = numeric::rank(&tail_sign_matrix(&lam, i)?, params.tol);
    Ok(SignDimReport { input: input.to_string(), q0: params.q0, kappa, i, dims: [graded, affine], pass: graded == affine })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;
    use crate::graded::{check_graded_relations, speh_module};
    use crate::scalar::{rat, PkPoly};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
    }

    fn speh(shape: &str, kappa_over_p: f64, q0: f64) -> (GradedModule, NumericGraded) {
        let m = speh_module(&shape.parse::<Partition>().unwrap(), &PkPoly::k());
        let p = q0.ln();
        let num = m.evaluate(p, kappa_over_p * p);
        (m, num)
    }

    #[test]
    fn removable_values_match_limits() {
        for q0 in [2.0, 3.0, 4.0] {
            let f = SpectralFunction::correction(q0);
            for (s, v) in f.removable_singularities() {
                assert!(close(f.eval(s).unwrap(), v, 1e-13));
                let h = 1e-6;
                let lim = 0.5 * (f.naive(s + h) + f.naive(s - h));
                assert!(close(lim, v, 1e-6), "{q0} {s}");
            }
            for x in [-3.1, -0.7, 0.4, 2.5] {
                assert!(close(f.eval(x).unwrap(), f.naive(x), 1e-12));
            }
        }
        assert!(close(SpectralFunction::bernoulli().eval(0.0).unwrap(), 1.0, 1e-15));
    }

    #[test]
    fn taylor_coefficients_of_bernoulli() {
        let c = SpectralFunction::bernoulli().taylor(0.0, 4).unwrap();
        let want = [1.0, -0.5, 1.0 / 12.0, 0.0];
        for (a, b) in c.iter().zip(want) {
            assert!((a - b).abs() < 1e-14);
        }
        // away from the expansion point, compare against the other branch
        let near = SpectralFunction::correction(3.0).taylor(0.9, 3).unwrap();
        let far = SpectralFunction::correction(3.0).taylor(0.9 + 1e-9, 3).unwrap();
        assert!(close(near[1], far[1], 1e-6));
    }

    #[test]
    fn matrix_function_examples() {
        let zero = Matrix::zeros(3, 3);
        assert!(matrix_function(&SpectralFunction::exp(), &zero, 1e-9).unwrap().is_identity());
        let (k, p) = (0.3, 2f64.ln());
        let d = Matrix::diagonal(vec![k, k - p]);
        let e = matrix_function(&SpectralFunction::exp(), &d, 1e-9).unwrap();
        assert!(close(*e.get(0, 0), k.exp(), 1e-14) && close(*e.get(1, 1), k.exp() / 2.0, 1e-14));
        let jordan = Matrix::from_rows(vec![vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0], vec![0.0, 0.0, 0.0]]);
        let b = matrix_function(&SpectralFunction::bernoulli(), &jordan, 1e-9).unwrap();
        let want = Matrix::identity(3).add(&jordan.scale(&-0.5)).add(&jordan.mul(&jordan).scale(&(1.0 / 12.0)));
        assert!(b.sub(&want).entries().all(|x| x.abs() < 1e-14));
        assert!(matches!(matrix_function(&SpectralFunction::reciprocal(), &zero, 1e-9), Err(Error::Singularity(_))));
    }

    #[test]
    fn lambda_examples() {
        let params = BridgeParams { q0: 4.0, ..Default::default() };
        let (_, triv) = speh("2", 0.5, 4.0);
        let lam = lambda_functor(&triv, &params).unwrap();
        assert!(close(*lam.tee(1).unwrap().get(0, 0), 4.0, 1e-12));
        assert!(close(*lam.theta(1).get(0, 0), (0.5 * 4f64.ln()).exp(), 1e-12));
        let (_, sign) = speh("1,1", 0.5, 4.0);
        let lam = lambda_functor(&sign, &params).unwrap();
        assert!(close(*lam.tee(1).unwrap().get(0, 0), -1.0, 1e-12));
        let (_, one) = speh("1", -1.0, 4.0);
        let lam = lambda_functor(&one, &params).unwrap();
        assert!(close(*lam.theta(1).get(0, 0), 0.25, 1e-12));
    }

    /// Rank-two principal series at a reducibility point: `E_1`, `E_2` are Jordan blocks.
    fn jordan_pair() -> GradedModule {
        let (k, p) = (PkPoly::k(), PkPoly::p());
        let z = PkPoly::zero();
        let e1 = Matrix::from_rows(vec![vec![k.clone(), p.clone()], vec![z.clone(), k.clone()]]);
        let e2 = Matrix::from_rows(vec![vec![k.clone(), p.neg()], vec![z, k]]);
        let t = Matrix::from_rows(vec![vec![rat(0, 1), rat(1, 1)], vec![rat(1, 1), rat(0, 1)]]);
        GradedModule::new(2, vec![e1, e2], vec![t]).unwrap()
    }

    #[test]
    fn factor_placement() {
        let params = BridgeParams { q0: 3.0, ..Default::default() };
        let m = jordan_pair();
        assert!(check_graded_relations(&m).passed());
        let (_, speh31) = speh("3,1", 0.5, 3.0);
        for num in [m.evaluate(3f64.ln(), 0.2), speh31] {
            let first = lambda_unchecked(&num, &params, FactorOrder::CorrectionFirst).unwrap();
            let last = lambda_unchecked(&num, &params, FactorOrder::CorrectionLast).unwrap();
            assert!(first.verify_relations().passed() && last.verify_relations().passed());
            let bad = lambda_unchecked(&num, &params, FactorOrder::Reflected).unwrap().verify_relations();
            assert!(bad.failures.iter().any(|f| f.starts_with("quadratic")), "{bad:?}");
        }
    }

    #[test]
    fn bridge_examples() {
        let params = BridgeParams { q0: 4.0, ..Default::default() };
        let (m, _) = speh("2,1", 0.5, 4.0);
        let r = bridge_bz_compare("2,1", &m, 0.5, 1, &params, 1e-8).unwrap();
        assert_eq!(r.dims, [2, 2]);
        assert!(r.pass);
        let params = BridgeParams { q0: 3.0, ..Default::default() };
        let (m, _) = speh("2,2", 1.0, 3.0);
        let r = bridge_bz_compare("2,2", &m, 1.0, 2, &params, 1e-8).unwrap();
        assert_eq!(r.dims, [1, 1]);
        assert!(r.pass);
    }

    #[test]
    fn sign_dimensions() {
        let params = BridgeParams::default();
        let (m, _) = speh("1,1", 0.0, 4.0);
        assert_eq!(sign_dim_compare("1,1", &m, 0.0, 2, &params).unwrap().dims, [1, 1]);
        let (m, _) = speh("2", 0.0, 4.0);
        assert_eq!(sign_dim_compare("2", &m, 0.0, 2, &params).unwrap().dims, [0, 0]);
        let (m, _) = speh("2,1", 0.0, 4.0);
        assert_eq!(sign_dim_compare("2,1", &m, 0.0, 2, &params).unwrap().dims, [1, 1]);
        assert_eq!(sign_dim_compare("2,1", &m, 0.0, 3, &params).unwrap().dims, [0, 0]);
    }
}
