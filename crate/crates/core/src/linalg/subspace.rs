use super::field::rref;
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Subspace of `F^ambient` with a canonical basis.
///
/// The basis rows are in reduced row echelon form, so the coordinates of a
/// member vector are simply its entries at the pivot columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_rref(&Matrix::identity(ambient), (0..ambient).collect())
    }

    fn from_rref(r: &Matrix<F>, pivots: Vec<usize>) -> Self {
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient: r.cols(), basis, pivots }
    }

    /// Span of the given vectors.
    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let m = Matrix::from_rows(vectors.to_vec());
        assert_eq!(m.cols(), ambient);
        let (r, piv) = rref(&m);
        Subspace::from_rref(&r, piv)
    }

    /// Column space of `m`.
    pub fn image(m: &Matrix<F>) -> Self {
        let (r, piv) = rref(&m.transpose());
        Subspace::from_rref(&r, piv)
    }

    /// Null space of `m` acting on column vectors.
    pub fn kernel(m: &Matrix<F>) -> Self {
        let n = m.cols();
        let (r, piv) = rref(m);
        let mut vecs = Vec::new();
        for f in (0..n).filter(|c| !piv.contains(c)) {
            let mut v = vec![F::zero(); n];
            v[f] = F::one();
            for (row, &pc) in piv.iter().enumerate() {
                v[pc] = r.get(row, f).neg();
            }
            vecs.push(v);
        }
        Subspace::span(n, &vecs)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_fn(self.ambient, self.dim(), |i, j| self.basis[j][i].clone())
    }

    /// Coordinates in the canonical basis, or `None` if `v` is not a member.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        coordinates_in(&self.basis, &self.pivots, v)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &vecs)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        let (a, b) = (self.dim(), other.dim());
        // columns u_1..u_a, -w_1..-w_b
        let m = Matrix::from_fn(self.ambient, a + b, |i, j| {
            if j < a {
                self.basis[j][i].clone()
            } else {
                other.basis[j - a][i].neg()
            }
        });
        let ker = Subspace::kernel(&m);
        let vecs: Vec<Vec<F>> = ker
            .basis
            .iter()
            .map(|c| {
                let mut v = vec![F::zero(); self.ambient];
                for (k, ck) in c.iter().take(a).enumerate() {
                    if ck.is_zero() {
                        continue;
                    }
                    for (vi, bi) in v.iter_mut().zip(&self.basis[k]) {
                        *vi = vi.add(&ck.mul(bi));
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.ambient, &vecs)
    }

    /// Image of the subspace under `m`.
    pub fn map(&self, m: &Matrix<F>) -> Self {
        let vecs: Vec<Vec<F>> = self.basis.iter().map(|b| m.mul_vec(b)).collect();
        Subspace::span(m.rows(), &vecs)
    }

    /// Matrix of `a` restricted to this subspace, in the canonical basis.
    ///
    /// Fails if the subspace is not `a`-invariant.
    pub fn restrict(&self, a: &Matrix<F>) -> Result<Matrix<F>> {
        restrict_with(&self.basis, &self.pivots, a, |x| x.clone())
    }

    /// Like [`Subspace::restrict`], for an operator over a ring containing `F`.
    pub fn restrict_lifted<R: Scalar>(&self, a: &Matrix<R>, lift: impl Fn(&F) -> R) -> Result<Matrix<R>> {
        restrict_with(&self.basis, &self.pivots, a, lift)
    }

    /// Same subspace written in the coordinates of `outer`, which must contain it.
    pub fn relative_to(&self, outer: &Self) -> Result<Self> {
        let vecs = self
            .basis
            .iter()
            .map(|v| outer.coordinates(v).ok_or_else(|| Error::NotInvariant("subspace not contained".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(outer.dim(), &vecs))
    }

    /// Embed coordinates of `outer` back into the ambient space.
    pub fn lift_from(inner: &Self, outer: &Self) -> Self {
        let vecs: Vec<Vec<F>> = inner.basis.iter().map(|c| outer.combine(c)).collect();
        Subspace::span(outer.ambient, &vecs)
    }

    /// `sum_k c_k b_k`.
    pub fn combine(&self, coords: &[F]) -> Vec<F> {
        let mut v = vec![F::zero(); self.ambient];
        for (ck, b) in coords.iter().zip(&self.basis) {
            if ck.is_zero() {
                continue;
            }
            for (vi, bi) in v.iter_mut().zip(b) {
                if !bi.is_zero() {
                    *vi = vi.add(&ck.mul(bi));
                }
            }
        }
        v
    }
}

fn coordinates_in<R: Scalar>(basis: &[Vec<R>], pivots: &[usize], v: &[R]) -> Option<Vec<R>> {
    let coords: Vec<R> = pivots.iter().map(|&p| v[p].clone()).collect();
    let mut residual = v.to_vec();
    for (c, b) in coords.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (ri, bi) in residual.iter_mut().zip(b) {
            if !bi.is_zero() {
                *ri = ri.sub(&c.mul(bi));
            }
        }
    }
    residual.iter().all(Scalar::is_zero).then_some(coords)
}

fn restrict_with<F: Field, R: Scalar>(
    basis: &[Vec<F>],
    pivots: &[usize],
    a: &Matrix<R>,
    lift: impl Fn(&F) -> R,
) -> Result<Matrix<R>> {
    let lifted: Vec<Vec<R>> = basis.iter().map(|b| b.iter().map(&lift).collect()).collect();
    let d = basis.len();
    let mut out = Matrix::zeros(d, d);
    for (k, b) in lifted.iter().enumerate() {
        let image = a.mul_vec(b);
        let coords = coordinates_in(&lifted, pivots, &image).ok_or_else(|| {
            Error::NotInvariant(format!("basis vector {k} leaves the subspace under the operator"))
        })?;
        for (i, c) in coords.into_iter().enumerate() {
            out.set(i, k, c);
        }
    }
    Ok(out)
}
