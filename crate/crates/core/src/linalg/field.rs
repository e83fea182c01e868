//! Elimination-based routines over exact fields.

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Reduced row echelon form and the pivot column of each nonzero row.
///
/// Pivot choice prefers an entry equal to one, then the first nonzero one,
/// which keeps rational-function entries from growing needlessly.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut rows = m.row_vecs();
    let ncols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let candidates = (r..rows.len()).filter(|&i| !rows[i][c].is_zero());
        let pick = candidates.clone().find(|&i| rows[i][c].is_one()).or_else(|| candidates.clone().next());
        let Some(p) = pick else { continue };
        rows.swap(r, p);
        if !rows[r][c].is_one() {
            let inv = rows[r][c].inv();
            for v in rows[r].iter_mut().skip(c) {
                if !v.is_zero() {
                    *v = v.mul(&inv);
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for j in c..ncols {
                if !pivot_row[j].is_zero() {
                    row[j] = row[j].sub(&factor.mul(&pivot_row[j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (Matrix::from_fn(m.rows(), ncols, |i, j| rows[i][j].clone()), pivots)
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    rref(m).1.len()
}

pub fn inverse<F: Field>(m: &Matrix<F>) -> Result<Matrix<F>> {
    if !m.is_square() {
        return Err(Error::SizeMismatch("inverse of a non-square matrix".into()));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(m.clone());
    }
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            F::one()
        } else {
            F::zero()
        }
    });
    let (r, piv) = rref(&aug);
    if piv.len() < n || piv[n - 1] >= n {
        return Err(Error::DivisionByZero);
    }
    Ok(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
}

/// Characteristic polynomial `det(x I - m)`, coefficients low degree first.
///
/// Similarity reduction to upper Hessenberg form followed by the usual
/// three-term determinant recurrence.
pub fn char_poly<F: Field>(m: &Matrix<F>) -> Vec<F> {
    assert!(m.is_square());
    let n = m.rows();
    let mut h: Vec<Vec<F>> = m.row_vecs();
    for j in 0..n.saturating_sub(2) {
        let Some(p) = (j + 1..n).find(|&i| !h[i][j].is_zero()) else { continue };
        if p != j + 1 {
            h.swap(p, j + 1);
            for row in h.iter_mut() {
                row.swap(p, j + 1);
            }
        }
        let piv_inv = h[j + 1][j].inv();
        for i in j + 2..n {
            if h[i][j].is_zero() {
                continue;
            }
            let u = h[i][j].mul(&piv_inv);
            for k in 0..n {
                if !h[j + 1][k].is_zero() {
                    let v = h[i][k].sub(&u.mul(&h[j + 1][k]));
                    h[i][k] = v;
                }
            }
            for row in h.iter_mut() {
                if !row[i].is_zero() {
                    let v = row[j + 1].add(&u.mul(&row[i]));
                    row[j + 1] = v;
                }
            }
        }
    }
    let mut polys: Vec<Vec<F>> = vec![vec![F::one()]];
    for m_ in 0..n {
        // (x - h[m][m]) p_m
        let prev = &polys[m_];
        let mut next = vec![F::zero(); m_ + 2];
        for (d, c) in prev.iter().enumerate() {
            next[d + 1] = next[d + 1].add(c);
            next[d] = next[d].sub(&c.mul(&h[m_][m_]));
        }
        let mut t = F::one();
        for i in 1..=m_ {
            t = t.mul(&h[m_ - i + 1][m_ - i]);
            if t.is_zero() {
                break;
            }
            let coef = t.mul(&h[m_ - i][m_]);
            if coef.is_zero() {
                continue;
            }
            for (d, c) in polys[m_ - i].iter().enumerate() {
                next[d] = next[d].sub(&coef.mul(c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, BigRational, Scalar};

    fn m(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect())
    }

    /// Determinant by cofactor expansion along the first row.
    fn det(a: &Matrix<BigRational>) -> BigRational {
        let n = a.rows();
        if n == 0 {
            return rat(1, 1);
        }
        let mut acc = rat(0, 1);
        for j in 0..n {
            let minor = Matrix::from_fn(n - 1, n - 1, |r, c| a.get(r + 1, if c < j { c } else { c + 1 }).clone());
            let term = a.get(0, j) * det(&minor);
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    #[test]
    fn char_poly_matches_determinant() {
        let a = m(&[&[0, 2, 1, 0], &[1, 0, 0, 3], &[0, 0, 0, 1], &[4, 0, 1, 2]]);
        let cp = char_poly(&a);
        assert_eq!(cp.len(), 5);
        for x0 in -3..=3 {
            let x = rat(x0, 1);
            let lhs = det(&Matrix::scalar(4, x.clone()).sub(&a));
            let rhs = cp.iter().rev().fold(rat(0, 1), |acc, c| acc * &x + c);
            assert_eq!(lhs, rhs, "x = {x0}");
        }
    }

    #[test]
    fn rref_and_inverse() {
        let a = m(&[&[2, 4], &[1, 3]]);
        let inv = inverse(&a).unwrap();
        assert!(a.mul(&inv).is_identity());
        let singular = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank(&singular), 1);
        assert!(inverse(&singular).is_err());
        let (r, piv) = rref(&m(&[&[0, 2, 4], &[0, 1, 3]]));
        assert_eq!(piv, vec![1, 2]);
        assert!(r.get(0, 1).is_one());
    }
}
