//! Exact commutative rings with identity and decidable equality.

mod gaussian;
mod json;
mod laurent;
mod monomial;
mod parse;

pub use gaussian::GaussianInt;
pub use json::{poly_from_json, poly_to_json, PolyJson, TermJson};
pub use laurent::LaurentPoly;
pub use monomial::Monomial;
pub use parse::parse_poly;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact commutative ring with identity.
///
/// Everything in [`crate::hessenberg`] and [`crate::sequences`] is generic over
/// this trait. Values are immutable; every operation returns a fresh value.
pub trait Ring: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    /// Multiplicative inverse, if `self` is a unit.
    fn inverse(&self) -> Option<Self>;

    /// Embeds a Gaussian integer, if the ring contains it.
    fn from_gaussian(g: &GaussianInt) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self^e` for `e >= 0`, or the inverse power when `self` is a unit.
    fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Some(acc)
    }

    fn sum<'a, I: IntoIterator<Item = &'a Self>>(items: I) -> Self {
        items.into_iter().fold(Self::zero(), |acc, x| acc.add(x))
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inverse(&self) -> Option<Self> {
        if One::is_one(&self.abs()) {
            Some(self.clone())
        } else {
            None
        }
    }
    fn from_gaussian(g: &GaussianInt) -> Option<Self> {
        Zero::is_zero(g.im()).then(|| g.re().clone())
    }
}

/// A value in one of the concrete rings, for callers that pick the ring at
/// run time (the CLI and the Python bindings).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingValue {
    Int(BigInt),
    Gaussian(GaussianInt),
    Poly(LaurentPoly),
}

impl RingValue {
    pub fn ring_name(&self) -> &'static str {
        match self {
            RingValue::Int(_) => "integer",
            RingValue::Gaussian(_) => "gaussian",
            RingValue::Poly(_) => "polynomial",
        }
    }

    fn mismatch(&self, other: &RingValue) -> Error {
        Error::RingMismatch {
            left: self.ring_name(),
            right: other.ring_name(),
        }
    }

    pub fn add(&self, other: &RingValue) -> Result<RingValue> {
        match (self, other) {
            (RingValue::Int(a), RingValue::Int(b)) => Ok(RingValue::Int(a + b)),
            (RingValue::Gaussian(a), RingValue::Gaussian(b)) => Ok(RingValue::Gaussian(a + b)),
            (RingValue::Poly(a), RingValue::Poly(b)) => Ok(RingValue::Poly(a + b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn mul(&self, other: &RingValue) -> Result<RingValue> {
        match (self, other) {
            (RingValue::Int(a), RingValue::Int(b)) => Ok(RingValue::Int(a * b)),
            (RingValue::Gaussian(a), RingValue::Gaussian(b)) => Ok(RingValue::Gaussian(a * b)),
            (RingValue::Poly(a), RingValue::Poly(b)) => Ok(RingValue::Poly(a * b)),
            _ => Err(self.mismatch(other)),
        }
    }

    /// Lifts the value into the polynomial ring, which contains the other two.
    pub fn to_poly(&self) -> LaurentPoly {
        match self {
            RingValue::Int(a) => LaurentPoly::constant(GaussianInt::from(a.clone())),
            RingValue::Gaussian(g) => LaurentPoly::constant(g.clone()),
            RingValue::Poly(p) => p.clone(),
        }
    }

    /// Narrowest ring holding the value: constant real polynomials become
    /// integers, constant complex ones Gaussian integers.
    pub fn simplify(self) -> RingValue {
        match self {
            RingValue::Poly(p) => match p.as_constant() {
                Some(c) if c.is_real() => RingValue::Int(c.re().clone()),
                Some(c) => RingValue::Gaussian(c),
                None => RingValue::Poly(p),
            },
            RingValue::Gaussian(g) if g.is_real() => RingValue::Int(g.re().clone()),
            other => other,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            RingValue::Int(a) => serde_json::Value::String(a.to_string()),
            RingValue::Gaussian(g) => {
                serde_json::to_value(poly_to_json(&LaurentPoly::constant(g.clone())))
                    .expect("polynomial json is always serializable")
            }
            RingValue::Poly(p) => serde_json::to_value(poly_to_json(p))
                .expect("polynomial json is always serializable"),
        }
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Int(a) => write!(f, "{a}"),
            RingValue::Gaussian(g) => write!(f, "{g}"),
            RingValue::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl From<BigInt> for RingValue {
    fn from(v: BigInt) -> Self {
        RingValue::Int(v)
    }
}

impl From<GaussianInt> for RingValue {
    fn from(v: GaussianInt) -> Self {
        RingValue::Gaussian(v)
    }
}

impl From<LaurentPoly> for RingValue {
    fn from(v: LaurentPoly) -> Self {
        RingValue::Poly(v)
    }
}
