//! Exact coefficient arithmetic.
//!
//! [`BigRational`] is the prime field, [`QRational`] the field `Q(q)` of
//! rational functions in the formal Hecke parameter, and [`PkPoly`] the
//! polynomial ring `Q[p, k]` used for graded modules, where `p` stands for
//! `log q` and `k` for the Speh parameter.

mod parse;
mod pk;
mod poly;
mod qrational;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use parse::{parse_qrational, parse_rational};
pub use pk::PkPoly;
pub use poly::{rational_to_f64, Poly};
pub use qrational::QRational;

use num_traits::{One, Zero};
use std::fmt::Debug;

/// Commutative ring operations used by the generic matrix code.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(r: &BigRational) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_i64(v: i64) -> Self {
        let mut acc = Self::zero();
        let one = Self::one();
        let step = if v < 0 { one.neg() } else { one };
        for _ in 0..v.unsigned_abs() {
            acc = acc.add(&step);
        }
        acc
    }
}

/// A [`Scalar`] with exact inverses.
pub trait Field: Scalar {
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

/// Build a rational from a small numerator and denominator.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

impl Field for BigRational {
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
}

impl Scalar for QRational {
    fn zero() -> Self {
        QRational::zero()
    }
    fn one() -> Self {
        QRational::one()
    }
    fn is_zero(&self) -> bool {
        QRational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        QRational::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        QRational::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        QRational::mul(self, other)
    }
    fn neg(&self) -> Self {
        QRational::neg(self)
    }
    fn is_one(&self) -> bool {
        QRational::is_one(self)
    }
    fn from_i64(v: i64) -> Self {
        QRational::from_int(v)
    }
    fn from_rational(r: &BigRational) -> Self {
        QRational::from_rational(r.clone())
    }
}

impl Field for QRational {
    fn inv(&self) -> Self {
        QRational::inv(self).expect("inverse of zero")
    }
}

impl Scalar for PkPoly {
    fn zero() -> Self {
        PkPoly::zero()
    }
    fn one() -> Self {
        PkPoly::one()
    }
    fn is_zero(&self) -> bool {
        PkPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        PkPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        PkPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        PkPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        PkPoly::neg(self)
    }
    fn from_i64(v: i64) -> Self {
        PkPoly::constant(BigRational::from_integer(v.into()))
    }
    fn from_rational(r: &BigRational) -> Self {
        PkPoly::constant(r.clone())
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_rational(r: &BigRational) -> Self {
        rational_to_f64(r)
    }
}

impl Field for f64 {
    fn inv(&self) -> Self {
        1.0 / self
    }
}
