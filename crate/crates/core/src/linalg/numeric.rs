//! Floating-point helpers on top of nalgebra.

use nalgebra::{Complex, DMatrix};

use super::matrix::Matrix;
use crate::error::{Error, Result};

pub fn to_na(m: &Matrix<f64>) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| *m.get(i, j))
}

pub fn from_na(m: &DMatrix<f64>) -> Matrix<f64> {
    Matrix::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
}

pub fn inverse(m: &Matrix<f64>) -> Result<Matrix<f64>> {
    if m.rows() == 0 {
        return Ok(m.clone());
    }
    to_na(m).try_inverse().map(|inv| from_na(&inv)).ok_or(Error::DivisionByZero)
}

/// Orthonormal basis (as columns) of the column space, keeping singular
/// values above `tol * max(1, σ_max)`.
pub fn image(m: &Matrix<f64>, tol: f64) -> DMatrix<f64> {
    let a = to_na(m);
    if a.nrows() == 0 || a.ncols() == 0 {
        return DMatrix::zeros(a.nrows(), 0);
    }
    let svd = a.svd(true, false);
    let u = svd.u.expect("left singular vectors requested");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let cut = tol * smax.max(1.0);
    let keep: Vec<usize> = (0..svd.singular_values.len()).filter(|&k| svd.singular_values[k] > cut).collect();
    DMatrix::from_fn(u.nrows(), keep.len(), |i, j| u[(i, keep[j])])
}

pub fn rank(m: &Matrix<f64>, tol: f64) -> usize {
    image(m, tol).ncols()
}

/// `Q^T A Q` for orthonormal columns `Q`, with the invariance residual
/// `|A Q - Q Q^T A Q| / max(1, |A|)` (Frobenius norms).
pub fn restrict(basis: &DMatrix<f64>, a: &Matrix<f64>) -> (Matrix<f64>, f64) {
    let a = to_na(a);
    let aq = &a * basis;
    let r = basis.transpose() * &aq;
    let res = (&aq - basis * &r).norm() / a.norm().max(1.0);
    (from_na(&r), res)
}

pub fn eigenvalues(m: &Matrix<f64>) -> Vec<Complex<f64>> {
    if m.rows() == 0 {
        return Vec::new();
    }
    to_na(m).complex_eigenvalues().iter().cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_inverse() {
        let m = Matrix::from_rows(vec![vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert_eq!(rank(&m, 1e-10), 1);
        assert!(inverse(&m).is_err() || inverse(&m).unwrap().entries().any(|x| x.abs() > 1e12));
        let a = Matrix::from_rows(vec![vec![2.0, 1.0], vec![0.0, 3.0]]);
        let prod = a.mul(&inverse(&a).unwrap());
        assert!((prod.get(0, 0) - 1.0).abs() < 1e-12 && prod.get(0, 1).abs() < 1e-12);
        let mut ev: Vec<f64> = eigenvalues(&a).iter().map(|z| z.re).collect();
        ev.sort_by(f64::total_cmp);
        assert!((ev[0] - 2.0).abs() < 1e-12 && (ev[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn restriction_to_invariant_line() {
        let a = Matrix::from_rows(vec![vec![2.0, 0.0], vec![0.0, 5.0]]);
        let p = Matrix::from_rows(vec![vec![0.0, 0.0], vec![0.0, 1.0]]);
        let q = image(&p, 1e-12);
        let (r, res) = restrict(&q, &a);
        assert!(res < 1e-14);
        assert!((r.get(0, 0) - 5.0).abs() < 1e-14);
    }
}
