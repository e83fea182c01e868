//! Principal series and parabolic induction.

use std::collections::HashMap;

use super::affine::{unit_weight, AffineElement, Weight};
use super::finite::FiniteHeckeElement;
use super::module::ExactModule;
use crate::combinatorics::{coset_factor, min_coset_reps, Permutation};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::QRational;

/// Pairwise ratios of `t` avoid `1` and `q^{±1}`.
pub fn is_generic(t: &[QRational]) -> bool {
    let q = QRational::q();
    let bad = [QRational::one(), q.clone(), q.inv().expect("q is nonzero")];
    for a in 0..t.len() {
        for b in 0..t.len() {
            if a == b {
                continue;
            }
            match t[a].div(&t[b]) {
                Ok(r) if !bad.contains(&r) => {}
                _ => return false,
            }
        }
    }
    true
}

pub fn check_generic(t: &[QRational]) -> Result<()> {
    if is_generic(t) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("parameter {} is not generic", render_params(t))))
    }
}

fn render_params(t: &[QRational]) -> String {
    let parts: Vec<String> = t.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

/// `t^z = prod t_k^{z_k}`.
fn char_value(t: &[QRational], z: &[i64]) -> Result<QRational> {
    let mut acc = QRational::one();
    for (tk, &e) in t.iter().zip(z) {
        let e = i32::try_from(e).map_err(|_| Error::InvalidInput(format!("exponent {e} out of range")))?;
        acc = acc.mul(&tk.pow(e)?);
    }
    Ok(acc)
}

/// `H_n ⊗_A C_t` in the basis `T_w ⊗ 1`, `w` in lexicographic order.
///
/// `h (T_w ⊗ 1)` is read off the right normal form `h T_w = sum c T_u θ_z`
/// as `sum c t^z (T_u ⊗ 1)`.
pub fn principal_series(t: &[QRational]) -> Result<ExactModule> {
    if let Some(k) = t.iter().position(QRational::is_zero) {
        return Err(Error::InvalidInput(format!("t_{} = 0", k + 1)));
    }
    let n = t.len();
    let basis = Permutation::all(n);
    let index: HashMap<&Permutation, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let dim = basis.len();
    let mut theta = Vec::with_capacity(n);
    for k in 0..n {
        let mut m: Matrix<QRational> = Matrix::zeros(dim, dim);
        for (col, w) in basis.iter().enumerate() {
            let h = AffineElement::monomial(QRational::one(), unit_weight(n, k), w.clone());
            for ((u, z), c) in h.to_right_normal().terms() {
                let row = index[u];
                let v = m.get(row, col).add(&c.mul(&char_value(t, z)?));
                m.set(row, col, v);
            }
        }
        theta.push(m);
    }
    let tee = (1..n)
        .map(|j| {
            let mut m = Matrix::zeros(dim, dim);
            for (col, w) in basis.iter().enumerate() {
                for (u, c) in FiniteHeckeElement::basis(w.clone()).mul_simple_left(j).terms() {
                    m.set(index[u], col, c.clone());
                }
            }
            m
        })
        .collect();
    if n == 0 {
        return Ok(ExactModule::rank_zero(QRational::q(), 1, 0.0));
    }
    let m = ExactModule::exact(dim, theta, tee)?;
    m.verify_relations().into_result().map_err(|e| Error::Consistency(format!("principal series: {e}")))?;
    Ok(m)
}

/// `H_n ⊗_{H_{n1} ⊗ H_{n2}} (M1 ⊠ M2)`.
pub fn induce(m1: &ExactModule, m2: &ExactModule) -> Result<ExactModule> {
    induce_levi(&m1.external_tensor(m2)?)
}

/// Induce a module of a Levi subalgebra up to `H_n`.
///
/// Basis `T_u ⊗ v` for minimal coset representatives `u` (outer) and a
/// basis `v` of `σ` (inner). To act by `h`, write `h T_u = sum c T_w θ_z`
/// and split `w = u' v'` with `u'` minimal and `v'` in the parabolic
/// subgroup; then `T_w θ_z ⊗ v = T_{u'} ⊗ T_{v'} θ_z v`.
pub fn induce_levi(sigma: &ExactModule) -> Result<ExactModule> {
    if !sigma.is_levi() {
        return Ok(sigma.clone());
    }
    let n = sigma.n();
    let blocks = sigma.blocks().to_vec();
    let reps = min_coset_reps(n, &blocks)?;
    let index: HashMap<&Permutation, usize> = reps.iter().enumerate().map(|(i, u)| (u, i)).collect();
    let d = sigma.dim();
    let dim = reps.len() * d;

    let mut cache: HashMap<(Permutation, Weight), Matrix<QRational>> = HashMap::new();
    let mut inner = |v: Permutation, z: Weight| -> Result<Matrix<QRational>> {
        if let Some(m) = cache.get(&(v.clone(), z.clone())) {
            return Ok(m.clone());
        }
        let m = sigma.t_word(&v)?.mul(&sigma.theta_pow(&z));
        cache.insert((v, z), m.clone());
        Ok(m)
    };

    let mut place = |out: &mut Matrix<QRational>, col_rep: usize, terms: Vec<(Permutation, Weight, QRational)>| -> Result<()> {
        for (w, z, c) in terms {
            let (u, v) = coset_factor(&w, &blocks);
            let row_rep = *index.get(&u).ok_or_else(|| Error::Consistency(format!("{u} is not a minimal coset representative")))?;
            let block = inner(v, z)?.scale(&c);
            for a in 0..d {
                for b in 0..d {
                    let x = block.get(a, b);
                    if x.is_zero() {
                        continue;
                    }
                    let (r, cidx) = (row_rep * d + a, col_rep * d + b);
                    let v = out.get(r, cidx).add(x);
                    out.set(r, cidx, v);
                }
            }
        }
        Ok(())
    };

    let mut theta = Vec::with_capacity(n);
    for k in 0..n {
        let mut m = Matrix::zeros(dim, dim);
        for (col, u) in reps.iter().enumerate() {
            let h = AffineElement::monomial(QRational::one(), unit_weight(n, k), u.clone());
            let terms = h.to_right_normal().terms().map(|((w, z), c)| (w.clone(), z.clone(), c.clone())).collect();
            place(&mut m, col, terms)?;
        }
        theta.push(m);
    }
    let mut tee = Vec::with_capacity(n - 1);
    for j in 1..n {
        let mut m = Matrix::zeros(dim, dim);
        for (col, u) in reps.iter().enumerate() {
            let terms =
                FiniteHeckeElement::basis(u.clone()).mul_simple_left(j).terms().map(|(w, c)| (w.clone(), vec![0; n], c.clone())).collect();
            place(&mut m, col, terms)?;
        }
        tee.push(m);
    }
    let out = ExactModule::exact(dim, theta, tee)?;
    out.verify_relations().into_result().map_err(|e| Error::Consistency(format!("induced module: {e}")))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> QRational {
        QRational::from_int(v)
    }

    #[test]
    fn rank_one_and_two() {
        let m = principal_series(&[r(5)]).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(*m.theta(1), Matrix::scalar(1, r(5)));
        let m = principal_series(&[r(1), r(4)]).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.verify_relations().max_residual, 0.0);
        // θ_1 θ_2 is central, acting by t_1 t_2
        assert_eq!(m.theta(1).mul(m.theta(2)).trace(), r(8));
        assert!(principal_series(&[r(1), r(0)]).is_err());
    }

    #[test]
    fn genericity_guard() {
        let q = QRational::q();
        assert!(is_generic(&[r(1), r(2), r(3)]));
        assert!(!is_generic(&[r(2), r(2)]));
        assert!(!is_generic(&[r(1), q.clone()]));
        assert!(check_generic(&[q.clone(), r(1)]).is_err());
    }

    #[test]
    fn induction_from_characters_is_principal_series() {
        let t = [r(3), r(7)];
        let a = ExactModule::character(&t[..1], false).unwrap();
        let b = ExactModule::character(&t[1..], false).unwrap();
        let ind = induce(&a, &b).unwrap();
        let ps = principal_series(&t).unwrap();
        assert_eq!(ind.thetas(), ps.thetas());
        assert_eq!(ind.tee(1), ps.tee(1));
    }

    #[test]
    fn induced_dimensions() {
        let a = principal_series(&[r(1), r(2)]).unwrap();
        let b = principal_series(&[r(5)]).unwrap();
        assert_eq!(induce(&a, &b).unwrap().dim(), 6);
        let z = ExactModule::rank_zero(QRational::q(), 1, 0.0);
        let same = induce(&a, &z).unwrap();
        assert_eq!(same.thetas(), a.thetas());
    }
}
