//! The derivative functor `BZ_i`, central-character blocks and the Leibniz
//! rule for derivatives of induced modules.

use serde::Serialize;

use super::affine::sign_projector_tail;
use super::finite::poincare;
use super::induce::induce;
use super::module::{AffineModule, ExactModule, HeckeScalar};
use crate::combinatorics::check_composition;
use crate::error::{Error, Result};
use crate::linalg::{char_poly, elementary_symmetric, Matrix, Subspace};
use crate::scalar::QRational;

type QMatrix = Matrix<QRational>;

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// Matrix of the normalized sign projector on the last `i` letters.
///
/// The unnormalized sum factors as `F_2 F_3 .. F_i` with
/// `F_k = 1 + c T_{k-1} (1 + c T_{k-2} (.. (1 + c T_1)))`, `c = -1/q`
/// (tail letters shifted by `n - i`), from the right coset decomposition
/// of `S_k` over `S_{k-1}`.
pub fn tail_sign_matrix<F: HeckeScalar>(m: &AffineModule<F>, i: usize) -> Result<Matrix<F>> {
    let n = m.n();
    if i > n {
        return Err(Error::InvalidInput(format!("derivative of order {i} for rank {n}")));
    }
    let dim = m.dim();
    let id = Matrix::identity(dim);
    let c = F::one().neg().div(m.q());
    let off = n - i;
    let mut s = id.clone();
    for k in 2..=i {
        let mut f = id.clone();
        for j in 1..k {
            let t = m.tee(off + j).ok_or_else(|| Error::InvalidInput(format!("T_{} missing", off + j)))?;
            f = id.add(&t.mul(&f).scale(&c));
        }
        s = s.mul(&f);
    }
    let norm = F::from_hecke(&poincare(i, &QRational::q().inv()?).inv()?, m.q())?;
    Ok(s.scale(&norm))
}

/// Image of the tail sign projector.
pub fn bz_subspace(m: &ExactModule, i: usize) -> Result<Subspace<QRational>> {
    Ok(Subspace::image(&tail_sign_matrix(m, i)?))
}

/// The same subspace from the projector element expanded in the `T_w` basis.
pub fn bz_subspace_brute(m: &ExactModule, i: usize) -> Result<Subspace<QRational>> {
    if i == 0 {
        return Ok(Subspace::full(m.dim()));
    }
    Ok(Subspace::image(&m.act(&sign_projector_tail(m.n(), i)?)?))
}

/// Restrict `Θ_1..Θ_r`, `T_1..T_{r-1}` of a full module to an invariant subspace.
fn restrict_front(m: &ExactModule, sub: &Subspace<QRational>, r: usize) -> Result<ExactModule> {
    let err = |e: Error| Error::Consistency(format!("subspace not invariant: {e}"));
    if r == 0 {
        return Ok(ExactModule::rank_zero(QRational::q(), sub.dim(), 0.0));
    }
    let theta = (1..=r).map(|k| sub.restrict(m.theta(k)).map_err(err)).collect::<Result<Vec<_>>>()?;
    let tee = (1..r)
        .map(|j| {
            let t = m.tee(j).ok_or_else(|| Error::InvalidInput(format!("T_{j} missing")))?;
            sub.restrict(t).map_err(err)
        })
        .collect::<Result<Vec<_>>>()?;
    ExactModule::exact(sub.dim(), theta, tee)
}

/// `BZ_i(M)`: the tail sign-projector image as an `H_{n-i}`-module.
pub fn bz_derivative(m: &ExactModule, i: usize) -> Result<ExactModule> {
    if m.is_levi() {
        return Err(Error::InvalidInput("derivative of a Levi module".into()));
    }
    if i == 0 {
        return Ok(m.clone());
    }
    let sub = bz_subspace(m, i)?;
    restrict_front(m, &sub, m.n() - i)
}

/// `∩_k ker (Θ_k - χ_k)^dim`.
pub fn generalized_eigenspace(m: &ExactModule, chi: &[QRational]) -> Result<Subspace<QRational>> {
    if chi.len() != m.n() {
        return Err(Error::RankMismatch(chi.len(), m.n()));
    }
    let mut acc = Subspace::full(m.dim());
    for (k, c) in chi.iter().enumerate() {
        let shifted = m.theta(k + 1).add_scalar(&c.neg());
        acc = acc.intersect(&Subspace::kernel(&shifted.pow(m.dim())));
        if acc.dim() == 0 {
            break;
        }
    }
    Ok(acc)
}

/// Sum of the generalized `Θ`-eigenspaces for the given characters, as a
/// module over the Levi subalgebra with the given blocks.
///
/// Invariance under the Levi generators is checked, not assumed; a failure
/// names the offending generator.
pub fn central_block(m: &ExactModule, chars: &[Vec<QRational>], blocks: &[usize]) -> Result<ExactModule> {
    let n = m.n();
    check_composition(n, blocks)?;
    let mut sub = Subspace::zero(m.dim());
    for chi in chars {
        sub = sub.sum(&generalized_eigenspace(m, chi)?);
    }
    let mut bound = 0;
    let mut boundaries = Vec::new();
    for &b in &blocks[..blocks.len() - 1] {
        bound += b;
        boundaries.push(bound);
    }
    let restrict = |name: String, a: &QMatrix| -> Result<QMatrix> {
        sub.restrict(a).map_err(|_| Error::NotInvariant(format!("block of dimension {} is not stable under {name}", sub.dim())))
    };
    let theta = (1..=n).map(|k| restrict(format!("Θ_{k}"), m.theta(k))).collect::<Result<Vec<_>>>()?;
    let tee = (1..n)
        .map(|j| {
            if boundaries.contains(&j) {
                return Ok(None);
            }
            let t = m.tee(j).ok_or_else(|| Error::InvalidInput(format!("T_{j} missing")))?;
            restrict(format!("T_{j}"), t).map(Some)
        })
        .collect::<Result<Vec<_>>>()?;
    ExactModule::levi(QRational::q(), sub.dim(), blocks.to_vec(), theta, tee, 0.0)
}

/// Characteristic polynomials of `e_1(Θ), .., e_n(Θ)` and of two fixed
/// combinations of them; together they pin down the multiset of central
/// characters.
pub fn central_fingerprint(m: &ExactModule) -> Vec<Vec<QRational>> {
    let n = m.n();
    if n == 0 {
        return vec![vec![QRational::from_int(m.dim() as i64)]];
    }
    let e = elementary_symmetric(m.thetas(), m.dim());
    let mut out: Vec<Vec<QRational>> = e[1..].iter().map(char_poly).collect();
    for base in [2i64, 3] {
        let mut combo = Matrix::zeros(m.dim(), m.dim());
        let mut w = 1i64;
        for er in &e[1..] {
            combo = combo.add(&er.scale(&QRational::from_int(w)));
            w *= base;
        }
        out.push(char_poly(&combo));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct LeibnizTerm {
    pub i1: usize,
    pub i2: usize,
    pub predicted_dim: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LeibnizReport {
    pub n: usize,
    pub split: (usize, usize),
    pub i: usize,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub terms: Vec<LeibnizTerm>,
    pub central_match: bool,
    pub pass: bool,
}

/// Compare `BZ_i(M_1 × M_2)` with `sum_{i_1 + i_2 = i} BZ_{i_1}(M_1) × BZ_{i_2}(M_2)`.
pub fn leibniz_check(m1: &ExactModule, m2: &ExactModule, i: usize) -> Result<LeibnizReport> {
    let (n1, n2) = (m1.n(), m2.n());
    let n = n1 + n2;
    if i > n {
        return Err(Error::InvalidInput(format!("derivative of order {i} for rank {n}")));
    }
    let lhs = bz_derivative(&induce(m1, m2)?, i)?;
    let mut terms = Vec::new();
    let mut rhs: Option<ExactModule> = None;
    for i1 in 0..=i.min(n1) {
        let i2 = i - i1;
        if i2 > n2 {
            continue;
        }
        let (d1, d2) = (bz_derivative(m1, i1)?, bz_derivative(m2, i2)?);
        let predicted_dim = binomial(n - i, n1 - i1) * d1.dim() * d2.dim();
        let piece = induce(&d1, &d2)?;
        terms.push(LeibnizTerm { i1, i2, predicted_dim, dim: piece.dim() });
        rhs = Some(match rhs {
            None => piece,
            Some(acc) => acc.direct_sum(&piece)?,
        });
    }
    let rhs = rhs.expect("i1 = max(0, i - n2) always contributes");
    let rhs_dim: usize = terms.iter().map(|t| t.predicted_dim).sum();
    let central_match = lhs.dim() == rhs.dim() && central_fingerprint(&lhs) == central_fingerprint(&rhs);
    let pass = lhs.dim() == rhs_dim && rhs.dim() == rhs_dim && central_match;
    Ok(LeibnizReport { n, split: (n1, n2), i, lhs_dim: lhs.dim(), rhs_dim, terms, central_match, pass })
}

/// `n!/i!`, the derivative dimension of a principal series module.
pub fn principal_derivative_dim(n: usize, i: usize) -> usize {
    ((i + 1)..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::induce::principal_series;

    fn r(v: i64) -> QRational {
        QRational::from_int(v)
    }

    #[test]
    fn factorized_projector_matches_expansion() {
        let m = principal_series(&[r(1), r(3), r(7)]).unwrap();
        for i in 0..=3 {
            assert_eq!(bz_subspace(&m, i).unwrap(), bz_subspace_brute(&m, i).unwrap(), "i = {i}");
            let p = tail_sign_matrix(&m, i).unwrap();
            assert_eq!(p.mul(&p), p);
        }
    }

    #[test]
    fn principal_series_derivatives() {
        let m = principal_series(&[r(2), r(5), r(11)]).unwrap();
        for i in 0..=3 {
            let d = bz_derivative(&m, i).unwrap();
            assert_eq!(d.dim(), principal_derivative_dim(3, i));
            assert!(d.verify_relations().passed());
        }
        assert_eq!(bz_derivative(&m, 0).unwrap().thetas(), m.thetas());
    }

    #[test]
    fn sign_character_survives_full_derivative() {
        let q = QRational::q();
        let st = ExactModule::character(&[r(1), q], true).unwrap();
        assert_eq!(bz_derivative(&st, 2).unwrap().dim(), 1);
        let triv = ExactModule::character(&[QRational::q(), r(1)], false).unwrap();
        assert_eq!(bz_derivative(&triv, 2).unwrap().dim(), 0);
    }

    #[test]
    fn central_block_inverts_induction() {
        let (t1, t2) = (r(3), r(10));
        let ps = principal_series(&[t1.clone(), t2.clone()]).unwrap();
        let block = central_block(&ps, &[vec![t1.clone(), t2.clone()]], &[1, 1]).unwrap();
        assert_eq!(block.dim(), 1);
        assert_eq!(*block.theta(1), Matrix::scalar(1, t1.clone()));
        let full = central_block(&ps, &[vec![t1.clone(), t2.clone()], vec![t2, t1]], &[2]).unwrap();
        assert_eq!(full.dim(), 2);
        assert_eq!(central_block(&ps, &[], &[1, 1]).unwrap().dim(), 0);
    }

    #[test]
    fn leibniz_small_cases() {
        let a = ExactModule::character(&[r(2)], false).unwrap();
        let b = ExactModule::character(&[r(9)], false).unwrap();
        let rep = leibniz_check(&a, &b, 1).unwrap();
        assert_eq!((rep.lhs_dim, rep.rhs_dim), (2, 2));
        assert!(rep.pass);
        assert!(leibniz_check(&a, &b, 0).unwrap().pass);
    }
}
