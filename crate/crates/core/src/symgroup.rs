//! Exact matrix models of symmetric group modules.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::combinatorics::{
    character_value, class_representative_word, class_size, factorial, hook_dimension, Partition, StandardTableau,
};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{rat, BigRational, Scalar};

pub type QMatrix = Matrix<BigRational>;

/// Young's seminormal form of the irreducible module of a shape.
///
/// Basis vectors are indexed by standard tableaux in last-letter order.
/// For `r = c(j+1) - c(j)` (contents in the tableau `T`):
/// `s_j v_T = (1/r) v_T + b v_{s_j T}`, where `b = 1` if `j` sits in a
/// higher row than `j + 1` in `T` and `b = 1 - 1/r^2` otherwise.
#[derive(Clone, Debug)]
pub struct SeminormalModule {
    shape: Partition,
    tableaux: Vec<StandardTableau>,
    gens: Vec<QMatrix>,
}

impl SeminormalModule {
    pub fn new(shape: &Partition) -> Self {
        let tableaux = StandardTableau::all(shape);
        let n = shape.size();
        let index = |t: &StandardTableau| tableaux.iter().position(|u| u == t).expect("tableau in basis");
        let dim = tableaux.len();
        let gens = (1..n)
            .map(|j| {
                let mut m = Matrix::zeros(dim, dim);
                for (col, t) in tableaux.iter().enumerate() {
                    let r = t.content(j + 1) - t.content(j);
                    let inv_r = rat(1, r);
                    m.set(col, col, inv_r.clone());
                    if let Some(u) = t.swap(j) {
                        let b = if t.row_of(j) < t.row_of(j + 1) {
                            rat(1, 1)
                        } else {
                            rat(1, 1) - &inv_r * &inv_r
                        };
                        m.set(index(&u), col, b);
                    }
                }
                m
            })
            .collect();
        SeminormalModule { shape: shape.clone(), tableaux, gens }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    /// Matrices of `s_1, .., s_{n-1}`.
    pub fn gens(&self) -> &[QMatrix] {
        &self.gens
    }

    /// Contents of the box holding `k` across the basis; the diagonal of `X_k`.
    pub fn jm_contents(&self, k: usize) -> Vec<i64> {
        self.tableaux.iter().map(|t| t.content(k)).collect()
    }

    /// Diagonal matrix of the Jucys–Murphy element `X_k`.
    pub fn jm_diagonal(&self, k: usize) -> QMatrix {
        Matrix::diagonal(self.jm_contents(k).into_iter().map(|c| rat(c, 1)).collect())
    }
}

/// `specht_module`: the seminormal model of the irreducible of shape `lambda`.
pub fn specht_module(lambda: &Partition) -> SeminormalModule {
    SeminormalModule::new(lambda)
}

/// Left-multiply `v` by the product `s_{a_1} ... s_{a_k}` of generators.
pub fn apply_word<F: Scalar>(gens: &[Matrix<F>], word: &[usize], v: &Matrix<F>) -> Matrix<F> {
    word.iter().rev().fold(v.clone(), |acc, &j| gens[j - 1].mul(&acc))
}

/// Word for the transposition of letters `a < b` (1-based).
pub fn transposition_word(a: usize, b: usize) -> Vec<usize> {
    assert!(a < b);
    let mut word: Vec<usize> = (a..b).collect();
    word.extend((a..b - 1).rev());
    word
}

/// `X_k = sum_{j<k} (j k)` computed by summing transposition matrices.
pub fn jm_by_transpositions<F: Scalar>(gens: &[Matrix<F>], dim: usize, k: usize) -> Matrix<F> {
    let id = Matrix::identity(dim);
    (1..k).fold(Matrix::zeros(dim, dim), |acc, j| acc.add(&apply_word(gens, &transposition_word(j, k), &id)))
}

/// Residual-free check of the Coxeter presentation of `S_m`.
pub fn check_coxeter<F: Scalar>(gens: &[Matrix<F>], dim: usize) -> Result<()> {
    for (j, g) in gens.iter().enumerate() {
        if g.rows() != dim || g.cols() != dim {
            return Err(Error::SizeMismatch(format!("generator s_{} is {}x{}", j + 1, g.rows(), g.cols())));
        }
        if !g.mul(g).is_identity() {
            return Err(Error::InvalidInput(format!("s_{} does not square to one", j + 1)));
        }
    }
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            let (x, y) = (&gens[a], &gens[b]);
            let ok = if b == a + 1 { x.mul(y).mul(x) == y.mul(x).mul(y) } else { x.commutes_with(y) };
            if !ok {
                return Err(Error::InvalidInput(format!("braid relation fails for s_{}, s_{}", a + 1, b + 1)));
            }
        }
    }
    Ok(())
}

/// Multiplicities of irreducibles in a module given by generator matrices.
///
/// `m` is the rank of the symmetric group (needed since `S_0` and `S_1`
/// both have no generators). Returned in lexicographic order of shapes,
/// zero multiplicities omitted.
pub fn decompose_sn(gens: &[QMatrix], m: usize, dim: usize) -> Result<Vec<(Partition, usize)>> {
    if gens.len() != m.saturating_sub(1) {
        return Err(Error::SizeMismatch(format!("{} generators for S_{m}", gens.len())));
    }
    check_coxeter(gens, dim).map_err(|e| Error::NotSnModule { m, reason: e.to_string() })?;
    let classes = Partition::all(m);
    let id = Matrix::identity(dim);
    let traces: Vec<BigRational> =
        classes.iter().map(|mu| apply_word(gens, &class_representative_word(mu), &id).trace()).collect();
    let order = BigRational::from_integer(factorial(m));
    let mut out = Vec::new();
    let mut total = 0usize;
    for lambda in &classes {
        let mut acc = rat(0, 1);
        for (mu, tr) in classes.iter().zip(&traces) {
            let chi = character_value(lambda, mu)?;
            acc += tr * BigRational::from_integer(class_size(mu) * BigInt::from(chi));
        }
        let mult = acc / &order;
        if !mult.is_integer() || mult.is_negative() {
            return Err(Error::NotSnModule { m, reason: format!("multiplicity of {lambda} is {mult}") });
        }
        let mult: usize = mult.to_integer().try_into().expect("small multiplicity");
        if mult > 0 {
            total += mult * hook_dimension(lambda) as usize;
            out.push((lambda.clone(), mult));
        }
    }
    if total != dim {
        return Err(Error::NotSnModule { m, reason: format!("constituents have dimension {total}, module {dim}") });
    }
    Ok(out)
}

/// Sign-isotypic part for the last `i` letters, with the action of the
/// remaining front generators.
#[derive(Clone, Debug)]
pub struct SignIsotypic {
    pub subspace: Subspace<BigRational>,
    pub front_gens: Vec<QMatrix>,
}

/// `sum_{w in S_i} sgn(w) w` on the last `i` of `m` letters, as a matrix.
///
/// Uses `sum_{S_k} sgn(w) w = (sum_{S_{k-1}} sgn(w) w)(1 - sum_{j<k} (j k))`,
/// so the whole sum is a product of `i - 1` short factors.
pub fn tail_sign_sum<F: Scalar>(gens: &[Matrix<F>], m: usize, i: usize, dim: usize) -> Matrix<F> {
    let off = m - i;
    let mut acc = Matrix::identity(dim);
    for k in (2..=i).rev() {
        let mut jk = Matrix::zeros(dim, dim);
        for j in 1..k {
            jk = jk.add(&apply_word(gens, &transposition_word(j + off, k + off), &acc));
        }
        acc = acc.sub(&jk);
    }
    acc
}

/// Image of the normalized tail sign idempotent, restricted front action.
pub fn sign_isotypic(gens: &[QMatrix], m: usize, i: usize, dim: usize) -> Result<SignIsotypic> {
    if i > m {
        return Err(Error::InvalidInput(format!("tail of size {i} in S_{m}")));
    }
    let inv = BigRational::new(BigInt::one(), factorial(i));
    let proj = tail_sign_sum(gens, m, i, dim).scale(&inv);
    let subspace = Subspace::image(&proj);
    let front_gens =
        gens.iter().take((m - i).saturating_sub(1)).map(|g| subspace.restrict(g)).collect::<Result<Vec<_>>>()?;
    Ok(SignIsotypic { subspace, front_gens })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_modules() {
        let sign = specht_module(&p("1,1"));
        assert_eq!(sign.gens()[0], Matrix::scalar(1, rat(-1, 1)));
        let triv = specht_module(&p("3"));
        assert!(triv.gens().iter().all(|g| g.is_identity()));
        let m = specht_module(&p("2,1"));
        assert_eq!(m.dim(), 2);
        let mut x2 = m.jm_contents(2);
        x2.sort();
        assert_eq!(x2, vec![-1, 1]);
    }

    #[test]
    fn seminormal_relations_and_jm_diagonality() {
        for n in 1..=5 {
            for lambda in Partition::all(n) {
                let m = specht_module(&lambda);
                check_coxeter(m.gens(), m.dim()).unwrap();
                for k in 1..=n {
                    assert_eq!(jm_by_transpositions(m.gens(), m.dim(), k), m.jm_diagonal(k), "{lambda} X_{k}");
                }
            }
        }
    }

    #[test]
    fn regular_representation_of_s3() {
        use crate::combinatorics::Permutation;
        let perms = Permutation::all(3);
        let gens: Vec<QMatrix> = (1..3)
            .map(|j| {
                let s = Permutation::simple(3, j);
                Matrix::from_fn(6, 6, |r, c| {
                    let image = s.compose(&perms[c]);
                    if perms[r] == image {
                        rat(1, 1)
                    } else {
                        rat(0, 1)
                    }
                })
            })
            .collect();
        let dec = decompose_sn(&gens, 3, 6).unwrap();
        assert_eq!(dec, vec![(p("1,1,1"), 1), (p("2,1"), 2), (p("3"), 1)]);
    }

    #[test]
    fn direct_sums_and_non_modules() {
        let a = specht_module(&p("2"));
        let b = specht_module(&p("1,1"));
        let gens = vec![Matrix::block_diag(&[a.gens()[0].clone(), b.gens()[0].clone()])];
        assert_eq!(decompose_sn(&gens, 2, 2).unwrap(), vec![(p("1,1"), 1), (p("2"), 1)]);
        let bad = vec![Matrix::scalar(1, rat(2, 1))];
        assert!(matches!(decompose_sn(&bad, 2, 1), Err(Error::NotSnModule { .. })));
    }

    #[test]
    fn sign_isotypic_examples() {
        let m = specht_module(&p("2,1"));
        let s0 = sign_isotypic(m.gens(), 3, 0, 2).unwrap();
        assert_eq!(s0.subspace.dim(), 2);
        let s1 = sign_isotypic(m.gens(), 3, 1, 2).unwrap();
        assert_eq!(decompose_sn(&s1.front_gens, 2, 2).unwrap(), vec![(p("1,1"), 1), (p("2"), 1)]);
        let m = specht_module(&p("2,2"));
        let s2 = sign_isotypic(m.gens(), 4, 2, 2).unwrap();
        assert_eq!(s2.subspace.dim(), 1);
        assert_eq!(decompose_sn(&s2.front_gens, 2, 1).unwrap(), vec![(p("1,1"), 1)]);
    }
}
