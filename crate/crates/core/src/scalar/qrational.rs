use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};

/// Rational function in the formal parameter `q` over the rationals.
///
/// Always stored reduced: numerator and denominator are coprime and the
/// denominator is monic, so two values are equal iff their fields are.
/// Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRational {
    num: Poly,
    den: Poly,
}

impl QRational {
    pub fn zero() -> Self {
        QRational { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        QRational { num: Poly::one(), den: Poly::one() }
    }

    /// The parameter `q` itself.
    pub fn q() -> Self {
        QRational { num: Poly::x(), den: Poly::one() }
    }

    pub fn from_int(v: i64) -> Self {
        QRational::from_rational(BigRational::from_integer(v.into()))
    }

    pub fn from_rational(r: BigRational) -> Self {
        QRational { num: Poly::constant(r), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        QRational { num: p, den: Poly::one() }
    }

    /// `num/den` reduced to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QRational::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return QRational::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            QRational { num, den }
        } else {
            let inv = lead.recip();
            QRational { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value does not depend on `q`.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    /// The rational constant, if the value is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            if self.den.is_one() {
                return QRational::from_poly(self.num.add(&other.num));
            }
            return QRational::reduce(self.num.add(&other.num), self.den.clone());
        }
        if other.den.is_one() {
            // gcd(a + b*d, d) = gcd(a, d) = 1 already
            return QRational { num: self.num.add(&other.num.mul(&self.den)), den: self.den.clone() };
        }
        if self.den.is_one() {
            return QRational { num: other.num.add(&self.num.mul(&other.den)), den: other.den.clone() };
        }
        let g = self.den.gcd(&other.den);
        let a_cof = other.den.div_exact(&g);
        let b_cof = self.den.div_exact(&g);
        let num = self.num.mul(&a_cof).add(&other.num.mul(&b_cof));
        let den = self.den.mul(&a_cof);
        if g.is_one() {
            // coprime denominators leave nothing to cancel
            if num.is_zero() {
                return QRational::zero();
            }
            return QRational { num, den };
        }
        QRational::reduce(num, den)
    }

    pub fn neg(&self) -> Self {
        QRational { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QRational::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let num = self.num.div_exact(&g1).mul(&other.num.div_exact(&g2));
        let den = self.den.div_exact(&g2).mul(&other.den.div_exact(&g1));
        QRational { num, den }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return QRational::zero();
        }
        QRational { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lead = self.num.leading().unwrap().recip();
        Ok(QRational { num: self.den.scale(&lead), den: self.num.scale(&lead) })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = QRational::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Exact value at `q = q0`.
    pub fn specialize(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Floating-point value at `q = q0`.
    pub fn eval_f64(&self, q0: f64) -> Result<f64> {
        let d = self.den.eval_f64(q0);
        if d == 0.0 {
            return Err(Error::Pole(q0.to_string()));
        }
        Ok(self.num.eval_f64(q0) / d)
    }
}

impl Default for QRational {
    fn default() -> Self {
        QRational::zero()
    }
}

impl PartialOrd for QRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Structural total order, used only for deterministic sorting.
impl Ord for QRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.den.cmp_structural(&other.den).then_with(|| self.num.cmp_structural(&other.num))
    }
}

fn wrap(p: &Poly) -> String {
    let s = p.render("q");
    let single_term = p.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1;
    if single_term && !s.starts_with('-') {
        s
    } else {
        format!("({s})")
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num.render("q"))
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for QRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_qrational(s)
    }
}

impl From<i64> for QRational {
    fn from(v: i64) -> Self {
        QRational::from_int(v)
    }
}

impl From<BigRational> for QRational {
    fn from(r: BigRational) -> Self {
        QRational::from_rational(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn q() -> QRational {
        QRational::q()
    }
    fn c(v: i64) -> QRational {
        QRational::from_int(v)
    }

    #[test]
    fn reduces_common_factor() {
        // (q-1)/(q^2-1) = 1/(q+1)
        let num = q().sub(&c(1));
        let den = q().mul(&q()).sub(&c(1));
        let r = num.div(&den).unwrap();
        assert_eq!(r, c(1).div(&q().add(&c(1))).unwrap());
        assert_eq!(r.numer(), &Poly::one());
        assert_eq!(r.denom(), &Poly::from_i64s(&[1, 1]));
    }

    #[test]
    fn sums_and_products_cancel() {
        let inv = c(1).div(&q().add(&c(1))).unwrap();
        let other = q().div(&q().add(&c(1))).unwrap();
        assert_eq!(inv.add(&other), c(1));
        let lhs = q().mul(&q()).add(&q()).mul(&c(1).div(&q()).unwrap());
        assert_eq!(lhs, q().add(&c(1)));
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert_eq!(q().div(&c(0)), Err(Error::DivisionByZero));
        assert!(QRational::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn specialization() {
        let inv = c(1).div(&q().add(&c(1))).unwrap();
        assert_eq!(inv.specialize(&rat(2, 1)).unwrap(), rat(1, 3));
        assert_eq!(q().specialize(&rat(2, 1)).unwrap(), rat(2, 1));
        let pole = c(1).div(&q().sub(&c(1))).unwrap();
        assert!(matches!(pole.specialize(&rat(1, 1)), Err(Error::Pole(_))));
    }

    #[test]
    fn denominators_are_monic() {
        let r = c(3).div(&q().scale(&rat(2, 1)).add(&c(4))).unwrap();
        assert!(r.denom().leading().unwrap().is_one());
        assert_eq!(r, c(3).scale(&rat(1, 2)).div(&q().add(&c(2))).unwrap());
    }
}
