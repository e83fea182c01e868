//! The affine Hecke algebra of `GL(n)` in Bernstein normal form.
//!
//! Elements are stored as `sum c θ_x T_w` (θ on the left). The only
//! relation needed beyond the finite Hecke algebra and `θ_x θ_y = θ_{x+y}`
//! is the cross relation for a simple reflection `s = s_j`, `α = e_j - e_{j+1}`:
//!
//! ```text
//! T_s θ_x = θ_{s x} T_s + (q - 1) Δ_j(x),   Δ_j(x) = (θ_x - θ_{s x}) / (1 - θ_{-α})
//! θ_x T_s = T_s θ_{s x} + (q - 1) Δ_j(x)
//! ```
//!
//! where the quotient is a finite sum because `x - s x` is a multiple of `α`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::finite::{sign_projector, FiniteHeckeElement};
use super::text::{join_terms, parse_terms, render_term, render_vector, Factor};
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::scalar::{rat, QRational};

pub type Weight = Vec<i64>;

/// Terms `(±1, y)` of the telescoped quotient `Δ_j(x) = sum ±θ_y`.
pub fn delta(x: &[i64], j: usize) -> Vec<(i64, Weight)> {
    let d = x[j - 1] - x[j];
    let step = |k: i64| {
        // x - k α
        let mut y = x.to_vec();
        y[j - 1] -= k;
        y[j] += k;
        y
    };
    if d > 0 {
        (0..d).map(|k| (1, step(k))).collect()
    } else {
        (1..=-d).map(|k| (-1, step(-k))).collect()
    }
}

/// `s_j` acting on a weight: swap coordinates `j-1` and `j`.
pub fn reflect(x: &[i64], j: usize) -> Weight {
    let mut y = x.to_vec();
    y.swap(j - 1, j);
    y
}

pub fn unit_weight(n: usize, k: usize) -> Weight {
    let mut x = vec![0; n];
    x[k] = 1;
    x
}

fn add_weights(a: &[i64], b: &[i64]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn q_minus_one() -> QRational {
    QRational::q().sub(&QRational::one())
}

fn add_into<K: Ord + Clone>(map: &mut BTreeMap<K, QRational>, key: K, c: &QRational) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(v) => {
            *v = v.add(c);
            if v.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, c.clone());
        }
    }
}

/// `sum c θ_x T_w`.
#[derive(Clone, PartialEq, Eq)]
pub struct AffineElement {
    n: usize,
    coeffs: BTreeMap<(Weight, Permutation), QRational>,
}

impl AffineElement {
    pub fn zero(n: usize) -> Self {
        AffineElement { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        AffineElement::monomial(QRational::one(), vec![0; n], Permutation::identity(n))
    }

    /// `c θ_x T_w`.
    pub fn monomial(c: QRational, x: Weight, w: Permutation) -> Self {
        assert_eq!(x.len(), w.n(), "weight and permutation ranks differ");
        let mut e = AffineElement::zero(w.n());
        add_into(&mut e.coeffs, (x, w), &c);
        e
    }

    pub fn theta(x: Weight) -> Self {
        let n = x.len();
        AffineElement::monomial(QRational::one(), x, Permutation::identity(n))
    }

    /// `θ_{e_k}`, 0-based `k`.
    pub fn theta_unit(n: usize, k: usize) -> Self {
        AffineElement::theta(unit_weight(n, k))
    }

    pub fn t(w: Permutation) -> Self {
        let n = w.n();
        AffineElement::monomial(QRational::one(), vec![0; n], w)
    }

    pub fn t_simple(n: usize, j: usize) -> Self {
        AffineElement::t(Permutation::simple(n, j))
    }

    pub fn from_finite(h: &FiniteHeckeElement) -> Self {
        let mut e = AffineElement::zero(h.n());
        for (w, c) in h.terms() {
            add_into(&mut e.coeffs, (vec![0; h.n()], w.clone()), c);
        }
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Weight, Permutation), &QRational)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, x: &[i64], w: &Permutation) -> QRational {
        self.coeffs.get(&(x.to_vec(), w.clone())).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut e = self.clone();
        for (k, c) in &other.coeffs {
            add_into(&mut e.coeffs, k.clone(), c);
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
            return AffineElement::zero(self.n);
        }
        AffineElement { n: self.n, coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v.mul(c))).collect() }
    }

    /// `θ_y * self`.
    pub fn shift_theta(&self, y: &[i64]) -> Self {
        let coeffs = self.coeffs.iter().map(|((x, w), c)| ((add_weights(x, y), w.clone()), c.clone())).collect();
        AffineElement { n: self.n, coeffs }
    }

    /// `T_{s_j} * self`.
    pub fn mul_simple_left(&self, j: usize) -> Self {
        let qm1 = q_minus_one();
        let mut out = BTreeMap::new();
        for ((x, w), c) in &self.coeffs {
            let sx = reflect(x, j);
            let fin = FiniteHeckeElement::basis(w.clone()).mul_simple_left(j);
            for (u, d) in fin.terms() {
                add_into(&mut out, (sx.clone(), u.clone()), &c.mul(d));
            }
            let corr = c.mul(&qm1);
            for (sign, y) in delta(x, j) {
                add_into(&mut out, (y, w.clone()), &corr.scale(&rat(sign, 1)));
            }
        }
        AffineElement { n: self.n, coeffs: out }
    }

    /// `T_w * self` along a reduced word.
    pub fn mul_t_left(&self, w: &Permutation) -> Self {
        w.reduced_word().iter().rev().fold(self.clone(), |acc, &j| acc.mul_simple_left(j))
    }

    /// `self * T_w`, which only touches the finite parts.
    pub fn mul_t_right(&self, w: &Permutation) -> Self {
        let word = w.reduced_word();
        let mut out = BTreeMap::new();
        for ((x, u), c) in &self.coeffs {
            let fin = word.iter().fold(FiniteHeckeElement::basis(u.clone()), |acc, &j| acc.mul_simple_right(j));
            for (v, d) in fin.terms() {
                add_into(&mut out, (x.clone(), v.clone()), &c.mul(d));
            }
        }
        AffineElement { n: self.n, coeffs: out }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let mut out = AffineElement::zero(self.n);
        // group the left factor by permutation so each T_w * other is done once
        let mut by_w: BTreeMap<&Permutation, Vec<(&Weight, &QRational)>> = BTreeMap::new();
        for ((x, w), c) in &self.coeffs {
            by_w.entry(w).or_default().push((x, c));
        }
        for (w, thetas) in by_w {
            let tw_other = other.mul_t_left(w);
            for (x, c) in thetas {
                for ((y, v), d) in &tw_other.coeffs {
                    add_into(&mut out.coeffs, (add_weights(x, y), v.clone()), &c.mul(d));
                }
            }
        }
        Ok(out)
    }

    /// Rewrite as `sum c T_w θ_x`.
    pub fn to_right_normal(&self) -> RightNormal {
        let mut out = RightNormal::zero(self.n);
        for ((x, w), c) in &self.coeffs {
            let word = w.reduced_word();
            push_theta_right(x, &word, c, &mut out);
        }
        out
    }

    /// Apply `T_w -> (-1)^{l(w)}`, leaving a Laurent polynomial in θ.
    pub fn sign_reduce(&self) -> BTreeMap<Weight, QRational> {
        let mut out = BTreeMap::new();
        for ((x, w), c) in &self.coeffs {
            let c = if w.length() % 2 == 0 { c.clone() } else { c.neg() };
            add_into(&mut out, x.clone(), &c);
        }
        out
    }

    /// `a ⊗ 1 -> H_{n + extra}`: pad weights with zeros at the end, `w -> w x 1`.
    pub fn embed_front(&self, extra: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|((x, w), c)| {
                let mut y = x.clone();
                y.extend(std::iter::repeat(0).take(extra));
                ((y, w.embed_front(extra)), c.clone())
            })
            .collect();
        AffineElement { n: self.n + extra, coeffs }
    }

    /// `1 ⊗ a -> H_{extra + n}`: pad weights with zeros in front, `w -> 1 x w`.
    pub fn embed_tail(&self, extra: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|((x, w), c)| {
                let mut y = vec![0; extra];
                y.extend(x.iter().copied());
                ((y, w.embed_tail(extra)), c.clone())
            })
            .collect();
        AffineElement { n: self.n + extra, coeffs }
    }
}

// θ_x T_{a_1} ... T_{a_k}, pushing θ to the right one letter at a time.
fn push_theta_right(x: &[i64], word: &[usize], c: &QRational, out: &mut RightNormal) {
    // stack of pending (prefix element in T's, weight, remaining word index)
    let mut stack: Vec<(FiniteHeckeElement, Weight, usize, QRational)> =
        vec![(FiniteHeckeElement::one(x.len()), x.to_vec(), 0, c.clone())];
    let qm1 = q_minus_one();
    while let Some((prefix, y, pos, coef)) = stack.pop() {
        if pos == word.len() {
            for (u, d) in prefix.terms() {
                add_into(&mut out.coeffs, (u.clone(), y.clone()), &coef.mul(d));
            }
            continue;
        }
        let j = word[pos];
        // θ_y T_j = T_j θ_{s y} + (q-1) Δ_j(y)
        stack.push((prefix.multiply(&FiniteHeckeElement::simple(x.len(), j)).unwrap(), reflect(&y, j), pos + 1, coef.clone()));
        for (sign, z) in delta(&y, j) {
            stack.push((prefix.clone(), z, pos + 1, coef.mul(&qm1).scale(&rat(sign, 1))));
        }
    }
}

/// `sum c T_w θ_x`, the right Bernstein normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RightNormal {
    n: usize,
    coeffs: BTreeMap<(Permutation, Weight), QRational>,
}

impl RightNormal {
    pub fn zero(n: usize) -> Self {
        RightNormal { n, coeffs: BTreeMap::new() }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Permutation, Weight), &QRational)> {
        self.coeffs.iter()
    }

    /// Back to the left normal form by multiplying out each `T_w θ_x`.
    pub fn to_left_normal(&self) -> AffineElement {
        let mut out = AffineElement::zero(self.n);
        for ((w, x), c) in &self.coeffs {
            out = out.add(&AffineElement::theta(x.clone()).mul_t_left(w).scale(c));
        }
        out
    }
}

/// Image of `1 ⊗ S_i` in `H_n`.
pub fn sign_projector_tail(n: usize, i: usize) -> Result<AffineElement> {
    if i == 0 || i > n {
        return Err(Error::InvalidInput(format!("tail size {i} for rank {n}")));
    }
    Ok(AffineElement::from_finite(&sign_projector(i)).embed_tail(n - i))
}

/// `m(a ⊗ b)` for `a ∈ H_{n-i}`, `b ∈ H_i`.
pub fn levi_embed(front: &AffineElement, tail: &AffineElement) -> AffineElement {
    let a = front.embed_front(tail.n());
    let b = tail.embed_tail(front.n());
    a.multiply(&b).expect("equal ranks after embedding")
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .map(|((x, w), c)| {
                let basis = if x.iter().all(|&v| v == 0) {
                    format!("T[{w}]")
                } else if w.is_identity() {
                    format!("th[{}]", render_vector(x))
                } else {
                    format!("th[{}] * T[{w}]", render_vector(x))
                };
                render_term(c, &basis)
            })
            .collect();
        f.write_str(&join_terms(terms))
    }
}

impl fmt::Debug for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for AffineElement {
    type Err = Error;

    /// Same grammar as the finite algebra plus `th[(1,0,-1)]` factors,
    /// multiplied in the order written.
    fn from_str(s: &str) -> Result<Self> {
        let terms = parse_terms(s)?;
        let n = terms
            .iter()
            .flat_map(|(_, fs)| fs.iter())
            .map(|f| match f {
                Factor::T(w) => w.n(),
                Factor::Theta(x) => x.len(),
            })
            .next()
            .ok_or_else(|| Error::Parse("no basis factor fixes the rank".into()))?;
        let mut out = AffineElement::zero(n);
        for (c, factors) in terms {
            let mut acc = AffineElement::one(n).scale(&c);
            for f in factors {
                let g = match f {
                    Factor::T(w) => AffineElement::t(w),
                    Factor::Theta(x) => {
                        if x.len() != n {
                            return Err(Error::RankMismatch(n, x.len()));
                        }
                        AffineElement::theta(x)
                    }
                };
                acc = acc.multiply(&g)?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}
