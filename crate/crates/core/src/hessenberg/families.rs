//! The four matrix families whose determinant (`C`, `B`) or permanent
//! (`H`, `L`) is the generalized Lucas polynomial `G_{k,n}(t)`.
//!
//! Every family has the same shape. With `d = r - s` and `t_0 = 1`, the
//! entry at `(r, s)` is nonzero only for `-1 <= d < k`, and is
//!
//! ```text
//! u(d) * t_{d+1} * t_2^{-d} * (d + 1 if s = 1 else 1)
//! ```
//!
//! where the unit `u(d)` distinguishes the families:
//!
//! | family | `u(d)`                   | superdiagonal | evaluated by |
//! |--------|--------------------------|---------------|--------------|
//! | `C`    | `i^{abs(d)}`             | `+i t_2`      | determinant  |
//! | `B`    | `-1` if `d = -1`, else 1 | `-t_2`        | determinant  |
//! | `H`    | `i^{d}`                  | `-i t_2`      | permanent    |
//! | `L`    | `1`                      | `+t_2`        | permanent    |

use std::fmt;
use std::str::FromStr;

use super::{hess_det, hess_per, HessenbergMatrix};
use crate::error::{Error, Result};
use crate::ring::{GaussianInt, LaurentPoly, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    C,
    B,
    H,
    L,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::C, Family::B, Family::H, Family::L];

    /// True for the families represented through the permanent.
    pub fn uses_permanent(self) -> bool {
        matches!(self, Family::H | Family::L)
    }

    pub fn build(self, k: usize, n: usize) -> Result<HessenbergMatrix<LaurentPoly>> {
        if k < 2 {
            return Err(Error::InvalidParameter(format!(
                "order k must be >= 2, got {k}"
            )));
        }
        Ok(HessenbergMatrix::from_fn(n, |r, s| entry(self, k, r, s)))
    }

    /// `det` for `C`/`B`, `per` for `H`/`L`.
    pub fn evaluate(self, m: &HessenbergMatrix<LaurentPoly>) -> LaurentPoly {
        if self.uses_permanent() {
            hess_per(m)
        } else {
            hess_det(m)
        }
    }
}

fn unit(family: Family, d: i64) -> GaussianInt {
    match family {
        Family::C => GaussianInt::i_pow(d.abs()),
        Family::H => GaussianInt::i_pow(d),
        Family::B if d == -1 => GaussianInt::from(-1),
        Family::B | Family::L => GaussianInt::from(1),
    }
}

fn entry(family: Family, k: usize, r: usize, s: usize) -> LaurentPoly {
    let d = r as i64 - s as i64;
    if d < -1 || d >= k as i64 {
        return LaurentPoly::zero();
    }
    let weight = if s == 1 { d + 1 } else { 1 };
    let coeff = unit(family, d).scale(&weight.into());
    // t_{d+1} * t_2^{-d}, with t_0 = 1
    let mut pairs = vec![(2, -d)];
    if d + 1 >= 1 {
        pairs.push(((d + 1) as u32, 1));
    }
    LaurentPoly::term(coeff, Monomial::from_pairs(pairs))
}

pub fn build_c(k: usize, n: usize) -> Result<HessenbergMatrix<LaurentPoly>> {
    Family::C.build(k, n)
}

pub fn build_b(k: usize, n: usize) -> Result<HessenbergMatrix<LaurentPoly>> {
    Family::B.build(k, n)
}

pub fn build_h(k: usize, n: usize) -> Result<HessenbergMatrix<LaurentPoly>> {
    Family::H.build(k, n)
}

pub fn build_l(k: usize, n: usize) -> Result<HessenbergMatrix<LaurentPoly>> {
    Family::L.build(k, n)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::C => "C",
            Family::B => "B",
            Family::H => "H",
            Family::L => "L",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "C" => Ok(Family::C),
            "B" => Ok(Family::B),
            "H" => Ok(Family::H),
            "L" => Ok(Family::L),
            _ => Err(Error::InvalidParameter(format!(
                "unknown matrix family {s:?} (expected C, B, H or L)"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    fn p(s: &str) -> LaurentPoly {
        parse_poly(s).unwrap()
    }

    fn dense(m: &HessenbergMatrix<LaurentPoly>) -> Vec<Vec<String>> {
        m.to_dense()
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect())
            .collect()
    }

    #[test]
    fn k_below_two_is_rejected() {
        for f in Family::ALL {
            assert!(matches!(f.build(1, 3), Err(Error::InvalidParameter(_))));
        }
    }

    #[test]
    fn one_by_one_is_t1() {
        for f in Family::ALL {
            for k in 2..5 {
                assert_eq!(dense(&f.build(k, 1).unwrap()), vec![vec!["t1".to_string()]]);
            }
        }
    }

    #[test]
    fn c_two_by_two() {
        let c = build_c(3, 2).unwrap();
        assert_eq!(dense(&c), vec![vec!["t1", "i*t2"], vec!["2*i", "t1"]]);
        assert_eq!(hess_det(&c), p("t1^2 + 2*t2"));
    }

    #[test]
    fn b_matches_worked_example_layout() {
        let b = build_b(4, 5).unwrap();
        let expected = [
            ["t1", "-t2", "0", "0", "0"],
            ["2", "t1", "-t2", "0", "0"],
            ["3*t2^-2*t3", "1", "t1", "-t2", "0"],
            ["4*t2^-3*t4", "t2^-2*t3", "1", "t1", "-t2"],
            ["0", "t2^-3*t4", "t2^-2*t3", "1", "t1"],
        ];
        assert_eq!(
            dense(&b),
            expected.map(|r| r.map(String::from).to_vec()).to_vec()
        );
    }

    #[test]
    fn h_superdiagonal_and_corner() {
        let h = build_h(4, 3).unwrap();
        assert_eq!(h.entry(1, 2), p("-i*t2"));
        assert_eq!(h.entry(2, 1), p("2*i"));
        // 3 * i^2 * t3 * t2^-2
        assert_eq!(h.entry(3, 1), p("-3*t3*t2^-2"));
        assert_eq!(h.entry(3, 2), p("i"));
    }

    #[test]
    fn l_is_flipped_b() {
        for k in 2..=5 {
            for n in 0..=7 {
                let l = build_l(k, n).unwrap();
                assert_eq!(l.flip_superdiagonal(), build_b(k, n).unwrap());
            }
        }
    }

    #[test]
    fn c_and_h_differ_only_on_superdiagonal() {
        let c = build_c(5, 6).unwrap();
        let h = build_h(5, 6).unwrap();
        for r in 1..=6 {
            for s in 1..=6 {
                let d = r as i64 - s as i64;
                let (ce, he) = (c.entry(r, s), h.entry(r, s));
                if d == -1 {
                    assert_eq!(ce, -&he, "({r},{s})");
                } else {
                    assert_eq!(ce, he, "({r},{s})");
                }
            }
        }
    }

    #[test]
    fn band_is_k_wide() {
        for f in Family::ALL {
            let m = f.build(3, 8).unwrap();
            assert_eq!(m.lower_bandwidth(), 3);
            assert!(m.entry(4, 1).is_empty());
        }
    }

    #[test]
    fn family_names_parse() {
        assert_eq!("h".parse::<Family>().unwrap(), Family::H);
        assert!("Q".parse::<Family>().is_err());
    }
}
