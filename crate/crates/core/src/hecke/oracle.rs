//! Polynomial realization of the affine Hecke algebra.
//!
//! `θ_x` acts on Laurent polynomials by multiplication with `X^x` and
//! `T_j` by the Demazure–Lusztig operator
//!
//! ```text
//! T_j f = q s_j(f) + (q - 1) (f - s_j f) / (1 - X^{-α_j})
//! ```
//!
//! The division is carried out by generic exact Laurent division rather
//! than by the telescoping formula used in [`super::affine`], so products
//! computed here are an independent check of the normal-form arithmetic.

use std::collections::BTreeMap;

use super::affine::{reflect, AffineElement, Weight};
use super::antispherical::weight_window;
use crate::error::{Error, Result};
use crate::scalar::QRational;

/// Laurent polynomial over `Q(q)`, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<Weight, QRational>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn monomial(x: Weight) -> Self {
        Laurent::term(x, QRational::one())
    }

    pub fn term(x: Weight, c: QRational) -> Self {
        let mut l = Laurent::zero();
        l.add_term(x, &c);
        l
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &QRational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, x: Weight, c: &QRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(x.clone()).or_insert_with(QRational::zero);
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.add_term(x.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&QRational::from_int(-1)))
    }

    pub fn scale(&self, c: &QRational) -> Self {
        let mut out = Laurent::zero();
        for (x, v) in &self.terms {
            out.add_term(x.clone(), &v.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Laurent::zero();
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                let z = x.iter().zip(y).map(|(u, v)| u + v).collect();
                out.add_term(z, &a.mul(b));
            }
        }
        out
    }

    pub fn reflect(&self, j: usize) -> Self {
        let mut out = Laurent::zero();
        for (x, c) in &self.terms {
            out.add_term(reflect(x, j), c);
        }
        out
    }

    fn leading(&self) -> Option<(&Weight, &QRational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient by `d`; fails if `d` does not divide `self`.
    ///
    /// Lexicographic leading-term reduction. Exponents of a product add, so
    /// each step strictly lowers the leading exponent of the remainder; the
    /// step bound catches non-divisible input.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (dl, dc) = d.leading().ok_or(Error::DivisionByZero)?;
        let dc_inv = dc.inv()?;
        let mut rem = self.clone();
        let mut quot = Laurent::zero();
        let span: i64 = self.terms.keys().chain(d.terms.keys()).flatten().map(|v| v.abs()).sum::<i64>() + 1;
        let bound = 64 * (self.terms.len() as i64 + 1) * span;
        let mut steps = 0;
        while let Some((rl, rc)) = rem.leading() {
            steps += 1;
            if steps > bound {
                return Err(Error::Consistency("Laurent division does not terminate".into()));
            }
            let shift: Weight = rl.iter().zip(dl).map(|(a, b)| a - b).collect();
            let c = rc.mul(&dc_inv);
            let t = Laurent::term(shift, c);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Ok(quot)
    }
}

/// The operator family of the realization, for rank `n`.
#[derive(Clone, Debug)]
pub struct PolyOracle {
    n: usize,
}

impl PolyOracle {
    pub fn new(n: usize) -> Self {
        PolyOracle { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn theta(&self, x: &[i64], f: &Laurent) -> Laurent {
        Laurent::monomial(x.to_vec()).mul(f)
    }

    pub fn t_simple(&self, j: usize, f: &Laurent) -> Result<Laurent> {
        let q = QRational::q();
        let sf = f.reflect(j);
        let mut neg_alpha = vec![0; self.n];
        neg_alpha[j - 1] = -1;
        neg_alpha[j] = 1;
        let denom = Laurent::monomial(vec![0; self.n]).sub(&Laurent::monomial(neg_alpha));
        let frac = f.sub(&sf).div_exact(&denom)?;
        Ok(sf.scale(&q).add(&frac.scale(&q.sub(&QRational::one()))))
    }

    /// Action of an element in normal form `sum c θ_x T_w`.
    pub fn apply(&self, h: &AffineElement, f: &Laurent) -> Result<Laurent> {
        let mut out = Laurent::zero();
        for ((x, w), c) in h.terms() {
            let mut g = f.clone();
            for &j in w.reduced_word().iter().rev() {
                g = self.t_simple(j, &g)?;
            }
            out = out.add(&self.theta(x, &g).scale(c));
        }
        Ok(out)
    }

    /// Monomials `X^x` with every coordinate in `[-r, r]`.
    pub fn window(&self, r: i64) -> Vec<Laurent> {
        weight_window(self.n, r).into_iter().map(Laurent::monomial).collect()
    }

    /// Residual-free check that `ab` acts as `a` after `b` on the window.
    pub fn check_product(&self, a: &AffineElement, b: &AffineElement, r: i64) -> Result<bool> {
        let ab = a.multiply(b)?;
        for f in self.window(r) {
            let lhs = self.apply(a, &self.apply(b, &f)?)?;
            let rhs = self.apply(&ab, &f)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_shifts_monomials() {
        let o = PolyOracle::new(2);
        let f = Laurent::monomial(vec![0, 0]);
        assert_eq!(o.theta(&[1, 0], &f), Laurent::monomial(vec![1, 0]));
    }

    #[test]
    fn laurent_division() {
        let d = Laurent::monomial(vec![0, 0]).sub(&Laurent::monomial(vec![-1, 1]));
        let f = Laurent::monomial(vec![2, -1]).sub(&Laurent::monomial(vec![-1, 2]));
        let q = f.div_exact(&d).unwrap();
        assert_eq!(q.mul(&d), f);
        let bad = Laurent::monomial(vec![1, 0]);
        assert!(bad.div_exact(&d).is_err());
    }

    #[test]
    fn quadratic_relation_on_monomials() {
        let o = PolyOracle::new(2);
        let q = QRational::q();
        for f in o.window(2) {
            let tf = o.t_simple(1, &f).unwrap();
            let ttf = o.t_simple(1, &tf).unwrap();
            // (T + 1)(T - q) f = T^2 f - (q - 1) T f - q f
            let res = ttf.sub(&tf.scale(&q.sub(&QRational::one()))).sub(&f.scale(&q));
            assert!(res.is_zero());
        }
    }

    #[test]
    fn generator_products_match_normal_form() {
        for n in 1..=3 {
            let o = PolyOracle::new(n);
            let mut gens = vec![AffineElement::one(n)];
            for j in 1..n {
                gens.push(AffineElement::t_simple(n, j));
            }
            for k in 0..n {
                let mut e = vec![0; n];
                e[k] = 1;
                gens.push(AffineElement::theta(e.clone()));
                e[k] = -1;
                gens.push(AffineElement::theta(e));
            }
            for a in &gens {
                for b in &gens {
                    assert!(o.check_product(a, b, 1).unwrap(), "{a} * {b}");
                }
            }
        }
    }
}
