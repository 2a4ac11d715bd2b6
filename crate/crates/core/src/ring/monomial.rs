use std::cmp::Ordering;
use std::fmt;

/// A Laurent monomial `t_{v1}^{e1} * t_{v2}^{e2} * ...`.
///
/// Stored as `(variable, exponent)` pairs sorted by variable index with no
/// zero exponents, so structural equality is mathematical equality.
///
/// Ordering is graded lexicographic: first by total degree, then by the
/// exponent vector `(e_1, e_2, ...)` compared lexicographically. Polynomials
/// print their terms from the greatest monomial down.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(u32, i64)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// `t_var^exp`; variable indices start at 1.
    pub fn var_pow(var: u32, exp: i64) -> Self {
        assert!(var >= 1, "variable indices start at 1");
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial {
                exps: vec![(var, exp)],
            }
        }
    }

    /// Builds from arbitrary pairs, merging repeated variables and dropping
    /// zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (u32, i64)>>(pairs: I) -> Self {
        let mut exps: Vec<(u32, i64)> = pairs.into_iter().collect();
        exps.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Vec<(u32, i64)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            assert!(v >= 1, "variable indices start at 1");
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        merged.retain(|&(_, e)| e != 0);
        Monomial { exps: merged }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, var: u32) -> i64 {
        self.exps
            .binary_search_by_key(&var, |&(v, _)| v)
            .map(|idx| self.exps[idx].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.exps.iter().copied()
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.exps.iter().any(|&(_, e)| e < 0)
    }

    pub fn max_var(&self) -> Option<u32> {
        self.exps.last().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { exps: out }
    }

    /// Lexicographic comparison of the dense exponent vectors.
    fn cmp_lex(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, ea)), None) => return ea.cmp(&0),
                (None, Some(&(_, eb))) => return 0.cmp(&eb),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    // `other` has exponent 0 at va
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.cmp_lex(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (idx, &(v, e)) in self.exps.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "t{v}")?;
            } else {
                write!(f, "t{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(u32, i64)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn zero_exponents_are_dropped() {
        assert_eq!(m(&[(2, 1), (2, -1)]), Monomial::one());
        assert_eq!(m(&[(3, 1), (1, 2), (3, 0)]).to_string(), "t1^2*t3");
        assert_eq!(Monomial::var_pow(4, 0), Monomial::one());
    }

    #[test]
    fn graded_lex_order() {
        // degree first
        assert!(m(&[(1, 5)]) > m(&[(1, 3), (2, 1)]));
        // within a degree, lexicographic on (e1, e2, ...)
        assert!(m(&[(1, 2), (3, 1)]) > m(&[(1, 1), (2, 2)]));
        assert!(m(&[(1, 1), (4, 1)]) > m(&[(2, 1), (3, 1)]));
        // negative exponents lower the degree
        assert!(m(&[(3, 1), (2, -2)]) < Monomial::one());
        assert!(m(&[(2, -1)]) < m(&[(3, -1)]));
    }

    #[test]
    fn product_adds_exponents() {
        let a = m(&[(2, 1), (3, 1)]);
        let b = m(&[(2, -1), (1, 1)]);
        assert_eq!(a.mul(&b), m(&[(1, 1), (3, 1)]));
    }

    #[test]
    fn exponent_lookup() {
        let a = m(&[(1, 2), (5, -3)]);
        assert_eq!(a.exponent(5), -3);
        assert_eq!(a.exponent(2), 0);
        assert_eq!(a.total_degree(), -1);
        assert!(a.has_negative_exponent());
    }
}
