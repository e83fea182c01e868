//! Polynomials in two commuting symbols `p` and `k`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::rational_to_f64;

/// Element of `Q[p, k]`, keyed by exponent pairs `(deg_p, deg_k)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PkPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl PkPoly {
    pub fn zero() -> Self {
        PkPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        PkPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        PkPoly::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigRational, dp: u32, dk: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((dp, dk), c);
        }
        PkPoly { terms }
    }

    /// The symbol `p`.
    pub fn p() -> Self {
        PkPoly::monomial(BigRational::one(), 1, 0)
    }

    /// The symbol `k`.
    pub fn k() -> Self {
        PkPoly::monomial(BigRational::one(), 0, 1)
    }

    /// `a*k + b*p + c`.
    pub fn linear(k_coeff: BigRational, p_coeff: BigRational, c: BigRational) -> Self {
        PkPoly::monomial(k_coeff, 0, 1).add(&PkPoly::monomial(p_coeff, 1, 0)).add(&PkPoly::constant(c))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, dp: u32, dk: u32) -> BigRational {
        self.terms.get(&(dp, dk)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        PkPoly { terms }
    }

    pub fn neg(&self) -> Self {
        PkPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return PkPoly::zero();
        }
        PkPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return PkPoly::zero();
        }
        let mut terms: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                *terms.entry((a1 + a2, b1 + b2)).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        PkPoly { terms }
    }

    /// Replace `k` by `a*p + b`.
    pub fn substitute_k(&self, a: &BigRational, b: &BigRational) -> Self {
        let lin = PkPoly::linear(BigRational::zero(), a.clone(), b.clone());
        let mut out = PkPoly::zero();
        for ((dp, dk), c) in &self.terms {
            let mut t = PkPoly::monomial(c.clone(), *dp, 0);
            for _ in 0..*dk {
                t = t.mul(&lin);
            }
            out = out.add(&t);
        }
        out
    }

    pub fn eval_f64(&self, p: f64, k: f64) -> f64 {
        self.terms
            .iter()
            .map(|((dp, dk), c)| rational_to_f64(c) * p.powi(*dp as i32) * k.powi(*dk as i32))
            .sum()
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // highest total degree first, k before p within a degree
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.1).cmp(&(a.0 + a.1, a.1)));
        for (dp, dk) in keys {
            let c = &self.terms[&(dp, dk)];
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !abs.is_one() || (dp == 0 && dk == 0) {
                factors.push(if abs.is_integer() {
                    abs.numer().to_string()
                } else {
                    format!("{}/{}", abs.numer(), abs.denom())
                });
            }
            for (sym, d) in [("k", dk), ("p", dp)] {
                match d {
                    0 => {}
                    1 => factors.push(sym.to_string()),
                    _ => factors.push(format!("{sym}^{d}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for PkPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for PkPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PkPoly({})", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_of_k() {
        let r = |n: i64, d: i64| crate::scalar::rat(n, d);
        // (k - p)^2 at k = p/2 + 1 is (1 - p/2)^2
        let e = PkPoly::k().sub(&PkPoly::p());
        let sq = e.mul(&e).substitute_k(&r(1, 2), &r(1, 1));
        assert_eq!(sq.coeff(2, 0), r(1, 4));
        assert_eq!(sq.coeff(1, 0), r(-1, 1));
        assert_eq!(sq.coeff(0, 0), r(1, 1));
        assert_eq!(sq.coeff(0, 1), r(0, 1));
    }
    use crate::scalar::rat;

    #[test]
    fn arithmetic_and_render() {
        let e = PkPoly::k().sub(&PkPoly::p());
        assert_eq!(e.render(), "k - p");
        let sq = e.mul(&e);
        assert_eq!(sq.render(), "k^2 - 2*k*p + p^2");
        assert!(e.sub(&e).is_zero());
        assert_eq!(PkPoly::linear(rat(1, 1), rat(-1, 2), rat(3, 1)).render(), "k - 1/2*p + 3");
        assert_eq!(sq.eval_f64(1.0, 3.0), 4.0);
    }
}
