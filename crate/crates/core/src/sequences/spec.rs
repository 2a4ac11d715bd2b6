use std::fmt;
use std::str::FromStr;

use super::{
    fibonacci_number, gen_er, gen_f, gen_g, gen_miles, gen_pell, gen_r, lucas_number,
    perrin_number, symbolic_coeffs,
};
use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, RingValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceFamily {
    /// Generalized Fibonacci polynomial `F_{k,n}(t)`.
    F,
    /// Generalized Lucas polynomial `G_{k,n}(t)`.
    G,
    /// Generalized Perrin polynomial `R_{k,n}(t)`.
    R,
    Miles,
    Er,
    Pell,
    Fibonacci,
    Lucas,
    Perrin,
}

impl SequenceFamily {
    fn min_order(self) -> usize {
        match self {
            SequenceFamily::R => 3,
            _ => 2,
        }
    }

    /// Families whose terms depend on an order `k`.
    pub fn has_order(self) -> bool {
        !matches!(
            self,
            SequenceFamily::Fibonacci | SequenceFamily::Lucas | SequenceFamily::Perrin
        )
    }

    /// Families that accept a coefficient assignment.
    pub fn has_coeffs(self) -> bool {
        matches!(
            self,
            SequenceFamily::F | SequenceFamily::G | SequenceFamily::R | SequenceFamily::Er
        )
    }

    pub fn has_branch(self) -> bool {
        matches!(self, SequenceFamily::Er | SequenceFamily::Pell)
    }
}

impl fmt::Display for SequenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SequenceFamily::F => "F",
            SequenceFamily::G => "G",
            SequenceFamily::R => "R",
            SequenceFamily::Miles => "miles",
            SequenceFamily::Er => "er",
            SequenceFamily::Pell => "pell",
            SequenceFamily::Fibonacci => "fibonacci",
            SequenceFamily::Lucas => "lucas",
            SequenceFamily::Perrin => "perrin",
        };
        f.write_str(s)
    }
}

impl FromStr for SequenceFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "F" | "f" => SequenceFamily::F,
            "G" | "g" => SequenceFamily::G,
            "R" | "r" => SequenceFamily::R,
            _ => match s.to_ascii_lowercase().as_str() {
                "miles" => SequenceFamily::Miles,
                "er" => SequenceFamily::Er,
                "pell" => SequenceFamily::Pell,
                "fibonacci" => SequenceFamily::Fibonacci,
                "lucas" => SequenceFamily::Lucas,
                "perrin" => SequenceFamily::Perrin,
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown sequence family {s:?}"
                    )))
                }
            },
        })
    }
}

/// A fully specified sequence: family, order, coefficients and branch.
///
/// Coefficients default to the symbols `t_1, ..., t_k` (or `c_j = t_j` for
/// the Er family). Integer values are carried as constant polynomials; the
/// result is narrowed back with [`RingValue::simplify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceSpec {
    family: SequenceFamily,
    k: usize,
    coeffs: Vec<LaurentPoly>,
    branch: usize,
}

impl SequenceSpec {
    pub fn new(family: SequenceFamily, k: usize) -> Result<Self> {
        let k = if family.has_order() { k } else { 2 };
        let min = family.min_order();
        if k < min {
            return Err(Error::InvalidParameter(format!(
                "family {family} needs order k >= {min}, got {k}"
            )));
        }
        Ok(SequenceSpec {
            family,
            k,
            coeffs: symbolic_coeffs(k),
            branch: 1,
        })
    }

    /// Replaces `t_j` (1-based) with `value`.
    pub fn with_coeff(mut self, j: usize, value: LaurentPoly) -> Result<Self> {
        if !self.family.has_coeffs() {
            return Err(Error::InvalidParameter(format!(
                "family {} takes no coefficients",
                self.family
            )));
        }
        if j < 1 || j > self.k {
            return Err(Error::InvalidParameter(format!(
                "coefficient t{j} is out of range for k = {}",
                self.k
            )));
        }
        self.coeffs[j - 1] = value;
        Ok(self)
    }

    pub fn with_branch(mut self, branch: usize) -> Result<Self> {
        if !self.family.has_branch() {
            return Err(Error::InvalidParameter(format!(
                "family {} has no branch index",
                self.family
            )));
        }
        if branch < 1 || branch > self.k {
            return Err(Error::InvalidParameter(format!(
                "branch must lie in 1..={}, got {branch}",
                self.k
            )));
        }
        self.branch = branch;
        Ok(self)
    }

    pub fn family(&self) -> SequenceFamily {
        self.family
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn branch(&self) -> usize {
        self.branch
    }

    pub fn term(&self, n: i64) -> Result<RingValue> {
        let nonneg = |n: i64| -> Result<u64> {
            u64::try_from(n)
                .map_err(|_| Error::InvalidParameter(format!("index n must be >= 0, got {n}")))
        };
        let value = match self.family {
            SequenceFamily::F => RingValue::Poly(gen_f(&self.coeffs, n)?),
            SequenceFamily::G => RingValue::Poly(gen_g(&self.coeffs, n)?),
            SequenceFamily::R => RingValue::Poly(gen_r(&self.coeffs, n)?),
            SequenceFamily::Er => RingValue::Poly(gen_er(&self.coeffs, self.branch, n)?),
            SequenceFamily::Miles => RingValue::Int(gen_miles(self.k, n)?),
            SequenceFamily::Pell => RingValue::Int(gen_pell(self.k, self.branch, n)?),
            SequenceFamily::Fibonacci => RingValue::Int(fibonacci_number(nonneg(n)?)?),
            SequenceFamily::Lucas => RingValue::Int(lucas_number(nonneg(n)?)),
            SequenceFamily::Perrin => RingValue::Int(perrin_number(nonneg(n)?)),
        };
        Ok(value.simplify())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn symbolic_by_default() {
        let s = SequenceSpec::new(SequenceFamily::G, 5).unwrap();
        assert_eq!(
            s.term(6).unwrap().to_string(),
            "t1^6 + 6*t1^4*t2 + 6*t1^3*t3 + 9*t1^2*t2^2 + 6*t1^2*t4 + 12*t1*t2*t3 + 2*t2^3 + 6*t1*t5 + 6*t2*t4 + 3*t3^2"
        );
    }

    #[test]
    fn integer_assignment_narrows_result() {
        let s = SequenceSpec::new(SequenceFamily::G, 2)
            .unwrap()
            .with_coeff(1, LaurentPoly::one())
            .unwrap()
            .with_coeff(2, LaurentPoly::one())
            .unwrap();
        assert_eq!(s.term(4).unwrap(), RingValue::Int(BigInt::from(7)));
    }

    #[test]
    fn validation() {
        assert!(SequenceSpec::new(SequenceFamily::R, 2).is_err());
        assert!(SequenceSpec::new(SequenceFamily::G, 1).is_err());
        let lucas = SequenceSpec::new(SequenceFamily::Lucas, 0).unwrap();
        assert_eq!(lucas.term(0).unwrap(), RingValue::Int(BigInt::from(2)));
        assert!(lucas.term(-1).is_err());
        assert!(lucas.clone().with_coeff(1, LaurentPoly::one()).is_err());
        let g = SequenceSpec::new(SequenceFamily::G, 3).unwrap();
        assert!(g.clone().with_coeff(4, LaurentPoly::one()).is_err());
        assert!(g.with_branch(1).is_err());
        assert!(SequenceSpec::new(SequenceFamily::Pell, 3)
            .unwrap()
            .with_branch(4)
            .is_err());
    }

    #[test]
    fn family_names() {
        assert_eq!("G".parse::<SequenceFamily>().unwrap(), SequenceFamily::G);
        assert_eq!(
            "Lucas".parse::<SequenceFamily>().unwrap(),
            SequenceFamily::Lucas
        );
        assert!("Q".parse::<SequenceFamily>().is_err());
    }
}
