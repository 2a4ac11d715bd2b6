use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Ring;

/// A Gaussian integer `re + im*i` with unbounded parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    re: BigInt,
    im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt {
            re: re.into(),
            im: im.into(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianInt::new(0, 1)
    }

    /// `i^e` for any integer `e`; cycles with period four.
    pub fn i_pow(e: i64) -> Self {
        match e.rem_euclid(4) {
            0 => GaussianInt::new(1, 0),
            1 => GaussianInt::new(0, 1),
            2 => GaussianInt::new(-1, 0),
            _ => GaussianInt::new(0, -1),
        }
    }

    pub fn re(&self) -> &BigInt {
        &self.re
    }

    pub fn im(&self) -> &BigInt {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }

    pub fn conj(&self) -> Self {
        GaussianInt::new(self.re.clone(), -&self.im)
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GaussianInt::new(&self.re * k, &self.im * k)
    }

    /// True for the four units `1, -1, i, -i`.
    pub fn is_unit(&self) -> bool {
        One::is_one(&self.norm())
    }

    /// Renders as a factor in a product: `3`, `-i`, `2*i`, `(1-2*i)`.
    pub(crate) fn fmt_factor(&self) -> String {
        if Zero::is_zero(&self.im) {
            return self.re.to_string();
        }
        let imag = match &self.im {
            v if One::is_one(v) => "i".to_string(),
            v if One::is_one(&-v) => "-i".to_string(),
            v => format!("{v}*i"),
        };
        if Zero::is_zero(&self.re) {
            imag
        } else if self.im.is_negative() {
            format!("({}{})", self.re, imag)
        } else {
            format!("({}+{})", self.re, imag)
        }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            write!(f, "{}", self.re)
        } else if Zero::is_zero(&self.re) {
            write!(f, "{}", self.fmt_factor())
        } else {
            let s = self.fmt_factor();
            write!(f, "{}", &s[1..s.len() - 1])
        }
    }
}

impl From<BigInt> for GaussianInt {
    fn from(re: BigInt) -> Self {
        GaussianInt {
            re,
            im: <BigInt as Zero>::zero(),
        }
    }
}

impl From<i64> for GaussianInt {
    fn from(re: i64) -> Self {
        GaussianInt::new(re, 0)
    }
}

impl<'a> Add<&'a GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt::new(-&self.re, -&self.im)
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: GaussianInt) -> GaussianInt {
        &self + &rhs
    }
}

impl Sub for GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: GaussianInt) -> GaussianInt {
        &self - &rhs
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: GaussianInt) -> GaussianInt {
        &self * &rhs
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        -&self
    }
}

impl Ring for GaussianInt {
    fn zero() -> Self {
        GaussianInt::default()
    }
    fn one() -> Self {
        GaussianInt::new(1, 0)
    }
    fn from_i64(n: i64) -> Self {
        GaussianInt::new(n, 0)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
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
        // the inverse of a unit is its conjugate
        self.is_unit().then(|| self.conj())
    }
    fn from_gaussian(g: &GaussianInt) -> Option<Self> {
        Some(g.clone())
    }
}
