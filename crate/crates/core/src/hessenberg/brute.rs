//! Permutation-expansion oracles for arbitrary square matrices.

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Largest dimension the permutation expansion accepts (8! = 40320 terms).
pub const BRUTE_FORCE_MAX_N: usize = 8;

pub fn brute_det<E: Ring>(a: &[Vec<E>]) -> Result<E> {
    Ok(expand(a, true)?.0)
}

pub fn brute_per<E: Ring>(a: &[Vec<E>]) -> Result<E> {
    Ok(expand(a, false)?.0)
}

/// Determinant together with the number of permutation products formed.
pub fn brute_det_counted<E: Ring>(a: &[Vec<E>]) -> Result<(E, u64)> {
    expand(a, true)
}

pub fn brute_per_counted<E: Ring>(a: &[Vec<E>]) -> Result<(E, u64)> {
    expand(a, false)
}

fn expand<E: Ring>(a: &[Vec<E>], signed: bool) -> Result<(E, u64)> {
    let n = a.len();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::DimensionTooLarge {
            n,
            max: BRUTE_FORCE_MAX_N,
        });
    }
    if let Some(r) = a.iter().position(|row| row.len() != n) {
        return Err(Error::MalformedMatrix(format!(
            "row {} has {} entries, expected {n}",
            r + 1,
            a[r].len()
        )));
    }

    let product = |perm: &[usize]| -> E {
        perm.iter()
            .enumerate()
            .fold(E::one(), |acc, (i, &j)| acc.mul(&a[i][j]))
    };

    // Heap's algorithm: every step is a single transposition, so the sign
    // alternates from one permutation to the next.
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = vec![0usize; n];
    let mut odd = false;
    let mut total = product(&perm);
    let mut products = 1u64;
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            let j = if i % 2 == 0 { 0 } else { counters[i] };
            perm.swap(j, i);
            odd = !odd;
            let p = product(&perm);
            products += 1;
            total = if signed && odd {
                total.sub(&p)
            } else {
                total.add(&p)
            };
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok((total, products))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{LaurentPoly, Ring};
    use num_bigint::BigInt;

    #[test]
    fn two_by_two_symbolic() {
        let [a, b, c, d] = [1, 2, 3, 4].map(LaurentPoly::var);
        let m = vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]];
        assert_eq!(brute_det(&m).unwrap(), &(&a * &d) - &(&b * &c));
        assert_eq!(brute_per(&m).unwrap(), &(&a * &d) + &(&b * &c));
    }

    #[test]
    fn identity_five() {
        let id: Vec<Vec<BigInt>> = (0..5)
            .map(|i| (0..5).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect();
        assert_eq!(brute_det(&id).unwrap(), BigInt::from(1));
        assert_eq!(brute_per(&id).unwrap(), BigInt::from(1));
    }

    #[test]
    fn all_ones_counts_permutations() {
        for n in 0..=BRUTE_FORCE_MAX_N {
            let ones = vec![vec![BigInt::one(); n]; n];
            let factorial: u64 = (1..=n as u64).product();
            let (per, products) = brute_per_counted(&ones).unwrap();
            assert_eq!(per, BigInt::from(factorial));
            assert_eq!(products, factorial);
            let det = brute_det(&ones).unwrap();
            assert_eq!(det, BigInt::from((n <= 1) as i64));
        }
    }

    #[test]
    fn rejects_oversized_and_ragged() {
        let big = vec![vec![BigInt::one(); 9]; 9];
        assert_eq!(
            brute_det(&big),
            Err(Error::DimensionTooLarge { n: 9, max: 8 })
        );
        let ragged = vec![vec![BigInt::one(); 2], vec![BigInt::one(); 1]];
        assert!(brute_per(&ragged).is_err());
    }
}
