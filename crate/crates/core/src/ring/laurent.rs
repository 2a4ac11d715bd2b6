use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use super::{GaussianInt, Monomial, Ring};
use crate::error::{Error, Result};

/// Sparse multivariate Laurent polynomial in `t1, t2, ...` over the Gaussian
/// integers.
///
/// Canonical form: no stored term has a zero coefficient, and monomials are
/// themselves canonical, so `==` is equality of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, GaussianInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(GaussianInt::one())
    }

    pub fn from_i64(n: i64) -> Self {
        LaurentPoly::constant(GaussianInt::from(n))
    }

    pub fn constant(c: GaussianInt) -> Self {
        LaurentPoly::term(c, Monomial::one())
    }

    /// The variable `t_j`.
    pub fn var(j: u32) -> Self {
        LaurentPoly::term(GaussianInt::one(), Monomial::var_pow(j, 1))
    }

    pub fn term(coeff: GaussianInt, mono: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !Ring::is_zero(&coeff) {
            terms.insert(mono, coeff);
        }
        LaurentPoly { terms }
    }

    /// Sums arbitrary `(coefficient, monomial)` pairs into canonical form.
    pub fn from_terms<I: IntoIterator<Item = (GaussianInt, Monomial)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (c, m) in terms {
            p.accumulate(m, &c);
        }
        p
    }

    fn accumulate(&mut self, mono: Monomial, coeff: &GaussianInt) {
        if Ring::is_zero(coeff) {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                let sum = &*existing + coeff;
                if Ring::is_zero(&sum) {
                    self.terms.remove(&mono);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(mono, coeff.clone());
            }
        }
    }

    /// Terms from the greatest monomial down (the printing order).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianInt)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &Monomial) -> GaussianInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// The value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<GaussianInt> {
        match self.terms.len() {
            0 => Some(GaussianInt::default()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Highest variable index that occurs, if any.
    pub fn max_var(&self) -> Option<u32> {
        self.terms.keys().filter_map(Monomial::max_var).max()
    }

    /// True iff every coefficient is real and no exponent is negative.
    pub fn is_plain_polynomial(&self) -> bool {
        self.terms
            .iter()
            .all(|(m, c)| c.is_real() && !m.has_negative_exponent())
    }

    pub fn scale(&self, k: &GaussianInt) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (c * k, m.clone())))
    }

    /// Evaluates with every variable replaced by a value in `E`.
    ///
    /// A variable that occurs with a negative exponent must map to a unit of
    /// `E`; coefficients must embed in `E` (imaginary ones do not embed in the
    /// integers).
    pub fn substitute<E: Ring>(&self, assignment: &BTreeMap<u32, E>) -> Result<E> {
        let mut acc = E::zero();
        for (mono, coeff) in &self.terms {
            let mut value = E::from_gaussian(coeff)
                .ok_or_else(|| Error::NotRepresentable(coeff.to_string()))?;
            for (var, exp) in mono.iter() {
                let base = assignment.get(&var).ok_or(Error::UnassignedVariable(var))?;
                let factor = base.pow(exp).ok_or(Error::NotInvertible(var))?;
                value = value.mul(&factor);
            }
            acc = acc.add(&value);
        }
        Ok(acc)
    }

    /// Substitutes the listed variables and leaves every other variable in
    /// place.
    pub fn partial_substitute(
        &self,
        assignment: &BTreeMap<u32, LaurentPoly>,
    ) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        for (mono, coeff) in &self.terms {
            let mut kept = Vec::new();
            let mut value = LaurentPoly::constant(coeff.clone());
            for (var, exp) in mono.iter() {
                match assignment.get(&var) {
                    Some(base) => {
                        let factor = Ring::pow(base, exp).ok_or(Error::NotInvertible(var))?;
                        value = &value * &factor;
                    }
                    None => kept.push((var, exp)),
                }
            }
            let rest = LaurentPoly::term(GaussianInt::one(), Monomial::from_pairs(kept));
            acc = &acc + &(&value * &rest);
        }
        Ok(acc)
    }

    /// Deterministic rendering under the canonical monomial order, e.g.
    /// `t1^2 - 3*t2 + i*t3*t2^-1`.
    pub fn canonical_string(&self) -> String {
        self.to_string()
    }

    fn fmt_term(coeff: &GaussianInt, mono: &Monomial) -> String {
        if mono.is_one() {
            return coeff.fmt_factor();
        }
        if coeff.is_real() {
            let re = coeff.re();
            if One::is_one(re) {
                return mono.to_string();
            }
            if One::is_one(&-re) {
                return format!("-{mono}");
            }
        }
        format!("{}*{}", coeff.fmt_factor(), mono)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (mono, coeff)) in self.terms().enumerate() {
            let s = LaurentPoly::fmt_term(coeff, mono);
            match (idx, s.strip_prefix('-')) {
                (0, _) => write!(f, "{s}")?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {s}")?,
            }
        }
        Ok(())
    }
}

impl From<GaussianInt> for LaurentPoly {
    fn from(c: GaussianInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(GaussianInt::from(c))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.accumulate(m.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.accumulate(m.clone(), &-c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.accumulate(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn from_i64(n: i64) -> Self {
        LaurentPoly::from_i64(n)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
        // units are single terms with a unit coefficient
        let (mono, coeff) = match self.terms.len() {
            1 => self.terms.iter().next()?,
            _ => return None,
        };
        let inv_coeff = coeff.inverse()?;
        let inv_mono = Monomial::from_pairs(mono.iter().map(|(v, e)| (v, -e)));
        Some(LaurentPoly::term(inv_coeff, inv_mono))
    }
    fn from_gaussian(g: &GaussianInt) -> Option<Self> {
        Some(LaurentPoly::constant(g.clone()))
    }
}
