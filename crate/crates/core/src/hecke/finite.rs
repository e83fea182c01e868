//! The finite Hecke algebra of `S_n` in the `T_w` basis.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::text::{join_terms, parse_terms, render_term, Factor};
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::scalar::QRational;

/// `sum_w c_w T_w`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteHeckeElement {
    n: usize,
    coeffs: BTreeMap<Permutation, QRational>,
}

impl FiniteHeckeElement {
    pub fn zero(n: usize) -> Self {
        FiniteHeckeElement { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        FiniteHeckeElement::basis(Permutation::identity(n))
    }

    /// `T_w`.
    pub fn basis(w: Permutation) -> Self {
        FiniteHeckeElement::term(QRational::one(), w)
    }

    pub fn term(c: QRational, w: Permutation) -> Self {
        let mut e = FiniteHeckeElement::zero(w.n());
        e.add_term(&w, &c);
        e
    }

    /// `T_{s_j}`.
    pub fn simple(n: usize, j: usize) -> Self {
        FiniteHeckeElement::basis(Permutation::simple(n, j))
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, QRational)>) -> Self {
        let mut e = FiniteHeckeElement::zero(n);
        for (w, c) in terms {
            e.add_term(&w, &c);
        }
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> QRational {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &QRational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_term(&mut self, w: &Permutation, c: &QRational) {
        if c.is_zero() {
            return;
        }
        assert_eq!(w.n(), self.n, "rank mismatch");
        match self.coeffs.get_mut(w) {
            Some(v) => {
                *v = v.add(c);
                if v.is_zero() {
                    self.coeffs.remove(w);
                }
            }
            None => {
                self.coeffs.insert(w.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut e = self.clone();
        for (w, c) in &other.coeffs {
            e.add_term(w, c);
        }
        e
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&QRational::from_int(-1))
    }

    pub fn scale(&self, c: &QRational) -> Self {
        if c.is_zero() {
            return FiniteHeckeElement::zero(self.n);
        }
        FiniteHeckeElement { n: self.n, coeffs: self.coeffs.iter().map(|(w, v)| (w.clone(), v.mul(c))).collect() }
    }

    /// `T_{s_j} * self`.
    pub fn mul_simple_left(&self, j: usize) -> Self {
        let q = QRational::q();
        let qm1 = q.sub(&QRational::one());
        let mut out = FiniteHeckeElement::zero(self.n);
        for (w, c) in &self.coeffs {
            let sw = w.mul_simple_left(j);
            if w.has_left_descent(j) {
                out.add_term(w, &c.mul(&qm1));
                out.add_term(&sw, &c.mul(&q));
            } else {
                out.add_term(&sw, c);
            }
        }
        out
    }

    /// `self * T_{s_j}`.
    pub fn mul_simple_right(&self, j: usize) -> Self {
        let q = QRational::q();
        let qm1 = q.sub(&QRational::one());
        let mut out = FiniteHeckeElement::zero(self.n);
        for (w, c) in &self.coeffs {
            let ws = w.mul_simple_right(j);
            if w.has_right_descent(j) {
                out.add_term(w, &c.mul(&qm1));
                out.add_term(&ws, &c.mul(&q));
            } else {
                out.add_term(&ws, c);
            }
        }
        out
    }

    /// `T_w * self`, along a reduced word of `w`.
    pub fn mul_basis_left(&self, w: &Permutation) -> Self {
        w.reduced_word().iter().rev().fold(self.clone(), |acc, &j| acc.mul_simple_left(j))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let mut out = FiniteHeckeElement::zero(self.n);
        for (w, c) in &self.coeffs {
            for (v, d) in other.mul_basis_left(w).coeffs {
                out.add_term(&v, &d.mul(c));
            }
        }
        Ok(out)
    }

    /// Apply `T_w -> (-1)^{l(w)}`.
    pub fn sign_value(&self) -> QRational {
        self.coeffs.iter().fold(QRational::zero(), |acc, (w, c)| acc.add(&c.mul(&sign_character(w))))
    }
}

/// `(-1)^{l(w)}`.
pub fn sign_character(w: &Permutation) -> QRational {
    QRational::from_int(w.sign())
}

/// `S = sum_w (-1/q)^{l(w)} T_w`, not normalized.
pub fn sign_projector(n: usize) -> FiniteHeckeElement {
    let c = QRational::from_int(-1).div(&QRational::q()).expect("q is nonzero");
    let powers = powers_of(&c, n * n.saturating_sub(1) / 2);
    FiniteHeckeElement::from_terms(n, Permutation::all(n).into_iter().map(|w| {
        let l = w.length();
        (w, powers[l].clone())
    }))
}

/// `P_n(z) = sum_w z^{l(w)} = prod_{k=1}^{n} (1 + z + .. + z^{k-1})`.
pub fn poincare(n: usize, z: &QRational) -> QRational {
    (1..=n).fold(QRational::one(), |acc, k| {
        let sum = powers_of(z, k - 1).iter().fold(QRational::zero(), |s, p| s.add(p));
        acc.mul(&sum)
    })
}

/// `S / P_n(1/q)`, an idempotent.
pub fn normalized_sign_projector(n: usize) -> FiniteHeckeElement {
    let inv_q = QRational::q().inv().expect("q is nonzero");
    let p = poincare(n, &inv_q);
    sign_projector(n).scale(&p.inv().expect("Poincare polynomial is nonzero"))
}

fn powers_of(c: &QRational, max: usize) -> Vec<QRational> {
    let mut out = Vec::with_capacity(max + 1);
    let mut acc = QRational::one();
    for _ in 0..=max {
        out.push(acc.clone());
        acc = acc.mul(c);
    }
    out
}

impl fmt::Display for FiniteHeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().map(|(w, c)| render_term(c, &format!("T[{w}]"))).collect();
        f.write_str(&join_terms(terms))
    }
}

impl fmt::Debug for FiniteHeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for FiniteHeckeElement {
    type Err = Error;

    /// Parse e.g. `"T[2 1 3] * (q-1)/q + T[1 2 3]"`. The rank is taken from
    /// the first `T[..]`; a pure scalar needs at least one basis factor.
    fn from_str(s: &str) -> Result<Self> {
        let terms = parse_terms(s)?;
        let n = terms
            .iter()
            .flat_map(|(_, fs)| fs.iter())
            .find_map(|f| match f {
                Factor::T(w) => Some(w.n()),
                Factor::Theta(_) => None,
            })
            .ok_or_else(|| Error::Parse("no T[..] factor fixes the rank".into()))?;
        let mut out = FiniteHeckeElement::zero(n);
        for (c, factors) in terms {
            let mut acc = FiniteHeckeElement::one(n).scale(&c);
            for f in factors {
                match f {
                    Factor::T(w) => acc = acc.multiply(&FiniteHeckeElement::basis(w))?,
                    Factor::Theta(_) => return Err(Error::Parse("th[..] in a finite Hecke element".into())),
                }
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}
