//! The antispherical module `H_n ⊗_{H_{S_n}} sgn`, free over the θ-subalgebra
//! on the generator `1 ⊗ 1`.

use std::collections::BTreeMap;
use std::fmt;

use super::affine::{AffineElement, Weight};
use super::text::{join_terms, render_term, render_vector};
use crate::error::{Error, Result};
use crate::scalar::QRational;

/// `sum c_x (θ_x ⊗ 1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct AntisphericalVector {
    n: usize,
    coeffs: BTreeMap<Weight, QRational>,
}

impl AntisphericalVector {
    pub fn zero(n: usize) -> Self {
        AntisphericalVector { n, coeffs: BTreeMap::new() }
    }

    /// The generator `1 ⊗ 1`.
    pub fn generator(n: usize) -> Self {
        AntisphericalVector::basis(vec![0; n])
    }

    /// `θ_x ⊗ 1`.
    pub fn basis(x: Weight) -> Self {
        let n = x.len();
        AntisphericalVector::from_terms(n, [(x, QRational::one())])
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Weight, QRational)>) -> Self {
        let mut v = AntisphericalVector::zero(n);
        for (x, c) in terms {
            assert_eq!(x.len(), n, "weight of the wrong rank");
            v.add_term(x, &c);
        }
        v
    }

    fn add_term(&mut self, x: Weight, c: &QRational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(x.clone()).or_insert_with(QRational::zero);
        *e = e.add(c);
        if e.is_zero() {
            self.coeffs.remove(&x);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, x: &[i64]) -> QRational {
        self.coeffs.get(x).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &QRational)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut v = self.clone();
        for (x, c) in &other.coeffs {
            v.add_term(x.clone(), c);
        }
        v
    }

    pub fn scale(&self, c: &QRational) -> Self {
        AntisphericalVector::from_terms(self.n, self.coeffs.iter().map(|(x, v)| (x.clone(), v.mul(c))))
    }
}

/// `h · v`: multiply out `h θ_x` in normal form, then `T_w -> (-1)^{l(w)}`.
pub fn antispherical_act(h: &AffineElement, v: &AntisphericalVector) -> Result<AntisphericalVector> {
    if h.n() != v.n {
        return Err(Error::RankMismatch(h.n(), v.n));
    }
    let mut out = AntisphericalVector::zero(v.n);
    for (x, c) in &v.coeffs {
        let prod = h.multiply(&AffineElement::theta(x.clone()))?;
        for (y, d) in prod.sign_reduce() {
            out.add_term(y, &d.mul(c));
        }
    }
    Ok(out)
}

/// Weights with every coordinate in `[-r, r]`, lexicographic.
pub fn weight_window(n: usize, r: i64) -> Vec<Weight> {
    let mut out: Vec<Weight> = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|p| (-r..=r).map(move |v| [p.clone(), vec![v]].concat())).collect();
    }
    out
}

/// Entries `(row, col) -> c` of `h` on the basis vectors of a window.
pub fn window_action(h: &AffineElement, r: i64) -> Result<BTreeMap<(Weight, Weight), QRational>> {
    let mut out = BTreeMap::new();
    for x in weight_window(h.n(), r) {
        let image = antispherical_act(h, &AntisphericalVector::basis(x.clone()))?;
        for (y, c) in image.coeffs {
            out.insert((y, x.clone()), c);
        }
    }
    Ok(out)
}

impl fmt::Display for AntisphericalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().map(|(x, c)| render_term(c, &format!("th[{}]", render_vector(x)))).collect();
        f.write_str(&join_terms(terms))
    }
}

impl fmt::Debug for AntisphericalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Permutation;

    #[test]
    fn sign_on_generator() {
        let g = AntisphericalVector::generator(2);
        let ts = AffineElement::t_simple(2, 1);
        assert_eq!(antispherical_act(&ts, &g).unwrap(), g.scale(&QRational::from_int(-1)));
        for w in Permutation::all(3) {
            let g = AntisphericalVector::generator(3);
            let image = antispherical_act(&AffineElement::t(w.clone()), &g).unwrap();
            assert_eq!(image, g.scale(&QRational::from_int(w.sign())));
        }
    }

    #[test]
    fn theta_acts_freely() {
        let g = AntisphericalVector::generator(2);
        let v = antispherical_act(&AffineElement::theta(vec![1, -2]), &g).unwrap();
        assert_eq!(v, AntisphericalVector::basis(vec![1, -2]));
    }

    #[test]
    fn two_evaluation_orders() {
        let g = AntisphericalVector::generator(2);
        let ts = AffineElement::t_simple(2, 1);
        let th = AffineElement::theta(vec![1, 0]);
        let lhs = antispherical_act(&ts.multiply(&th).unwrap(), &g).unwrap();
        let rhs = antispherical_act(&ts, &antispherical_act(&th, &g).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        // T_s θ_{(1,0)} ⊗ 1 = -θ_{(0,1)} + (q - 1) θ_{(1,0)}
        assert_eq!(lhs.coeff(&[0, 1]), QRational::from_int(-1));
        assert_eq!(lhs.coeff(&[1, 0]), QRational::q().sub(&QRational::one()));
    }

    #[test]
    fn window_is_stable() {
        let h: AffineElement = "th[(1,0)] * T[2 1] + T[2 1] * th[(0,-1)] * q".parse().unwrap();
        let small = window_action(&h, 1).unwrap();
        let big = window_action(&h, 2).unwrap();
        for (k, v) in &small {
            assert_eq!(big.get(k), Some(v));
        }
    }
}
