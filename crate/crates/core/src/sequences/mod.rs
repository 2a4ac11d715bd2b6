//! Recurrence generators for the generalized Fibonacci, Lucas and Perrin
//! polynomials and their integer specializations.
//!
//! Every polynomial generator is generic over [`Ring`] and takes the
//! coefficient vector `t = (t_1, ..., t_k)` as a slice, so the same code runs
//! symbolically (`t_j` the variable) and on integers. Nothing here shares the
//! matrix code path; these are the oracles the matrix representations are
//! checked against.

mod spec;

pub use spec::{SequenceFamily, SequenceSpec};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, Ring};

/// The variables `t_1, ..., t_k`.
pub fn symbolic_coeffs(k: usize) -> Vec<LaurentPoly> {
    (1..=k as u32).map(LaurentPoly::var).collect()
}

fn check_order<E>(t: &[E], min: usize) -> Result<usize> {
    let k = t.len();
    if k < min {
        return Err(Error::InvalidParameter(format!(
            "order k must be >= {min}, got {k}"
        )));
    }
    Ok(k)
}

fn check_index(n: i64) -> Result<usize> {
    usize::try_from(n)
        .map_err(|_| Error::InvalidParameter(format!("index n must be >= 0, got {n}")))
}

/// `F_{k,0..=n_max}(t)`: `F_n = 0` for `n < 1`, `F_1 = 1`, and
/// `F_{n+1} = t_1 F_n + ... + t_k F_{n-k+1}`.
pub fn fibonacci_polys<E: Ring>(t: &[E], n_max: usize) -> Result<Vec<E>> {
    let k = check_order(t, 2)?;
    let mut f = Vec::with_capacity(n_max + 1);
    f.push(E::zero());
    for n in 1..=n_max {
        if n == 1 {
            f.push(E::one());
            continue;
        }
        let mut acc = E::zero();
        for j in 1..=k.min(n - 1) {
            if !f[n - j].is_zero() {
                acc = acc.add(&t[j - 1].mul(&f[n - j]));
            }
        }
        f.push(acc);
    }
    Ok(f)
}

/// Generalized Fibonacci polynomial `F_{k,n}(t)`; zero for `n < 1`.
pub fn gen_f<E: Ring>(t: &[E], n: i64) -> Result<E> {
    check_order(t, 2)?;
    if n < 1 {
        return Ok(E::zero());
    }
    Ok(fibonacci_polys(t, n as usize)?.pop().expect("non-empty"))
}

/// `G_{k,0..=n_max}(t)` with `G_0 = k` and
/// `G_n = sum_{j=1}^{k} j t_j F_{k,n-j+1}(t)` for `n >= 1`.
///
/// For `n <= k` this is the Newton-identity start
/// `G_n = t_1 G_{n-1} + ... + t_{n-1} G_1 + n t_n`; from `n = k` on, the
/// sequence satisfies the homogeneous recurrence
/// `G_n = t_1 G_{n-1} + ... + t_k G_{n-k}`.
pub fn lucas_polys<E: Ring>(t: &[E], n_max: usize) -> Result<Vec<E>> {
    let k = check_order(t, 2)?;
    let f = fibonacci_polys(t, n_max + 1)?;
    let weighted: Vec<E> = t
        .iter()
        .enumerate()
        .map(|(j0, tj)| E::from_i64(j0 as i64 + 1).mul(tj))
        .collect();
    let mut g = Vec::with_capacity(n_max + 1);
    g.push(E::from_i64(k as i64));
    for n in 1..=n_max {
        let mut acc = E::zero();
        // F_{n-j+1} vanishes once j > n
        for j in 1..=k.min(n) {
            acc = acc.add(&weighted[j - 1].mul(&f[n - j + 1]));
        }
        g.push(acc);
    }
    Ok(g)
}

/// Generalized Lucas polynomial `G_{k,n}(t)`.
pub fn gen_g<E: Ring>(t: &[E], n: i64) -> Result<E> {
    let n = check_index(n)?;
    Ok(lucas_polys(t, n)?.pop().expect("non-empty"))
}

/// `R_{k,0..=n_max}(t)` for `k >= 3`: `R_0 = k`, `R_1 = 0`,
/// `R_m = t_2 R_{m-2} + ... + t_{m-1} R_1 + m t_m` for `2 <= m < k`, and
/// `R_n = t_2 R_{n-2} + ... + t_k R_{n-k}` for `n >= k`.
pub fn perrin_polys<E: Ring>(t: &[E], n_max: usize) -> Result<Vec<E>> {
    let k = check_order(t, 3)?;
    let mut r: Vec<E> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let value = match n {
            0 => E::from_i64(k as i64),
            1 => E::zero(),
            m if m < k => {
                let mut acc = E::from_i64(m as i64).mul(&t[m - 1]);
                for j in 2..m {
                    acc = acc.add(&t[j - 1].mul(&r[m - j]));
                }
                acc
            }
            m => {
                let mut acc = E::zero();
                for j in 2..=k {
                    acc = acc.add(&t[j - 1].mul(&r[m - j]));
                }
                acc
            }
        };
        r.push(value);
    }
    Ok(r)
}

/// Generalized Perrin polynomial `R_{k,n}(t)`, `k >= 3`.
pub fn gen_r<E: Ring>(t: &[E], n: i64) -> Result<E> {
    let n = check_index(n)?;
    Ok(perrin_polys(t, n)?.pop().expect("non-empty"))
}

/// Generalized order-k Fibonacci number `f_{k,n}`, `n >= 1`:
/// `f_{k,1} = ... = f_{k,k-2} = 0`, `f_{k,k-1} = f_{k,k} = 1`, then the sum of
/// the previous `k` terms.
pub fn gen_miles(k: usize, n: i64) -> Result<BigInt> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "order k must be >= 2, got {k}"
        )));
    }
    if n < 1 {
        return Err(Error::InvalidParameter(format!(
            "index n must be >= 1, got {n}"
        )));
    }
    let n = n as usize;
    // seq[i] holds f_{k,i+1}
    let mut seq: Vec<BigInt> = Vec::with_capacity(n.max(k));
    for i in 1..=n {
        let v = if i < k - 1 {
            BigInt::from(0)
        } else if i <= k {
            BigInt::from(1)
        } else {
            seq[i - 1 - k..i - 1].iter().sum()
        };
        seq.push(v);
    }
    Ok(seq.pop().expect("n >= 1"))
}

/// Term `n` of the `branch`-th sequence with constant coefficients
/// `c = (c_1, ..., c_k)`: `f_n = sum_j c_j f_{n-j}` for `n > 0`, with
/// boundary `f_n = [branch = 1 - n]` for `1 - k <= n <= 0`.
pub fn gen_er<E: Ring>(c: &[E], branch: usize, n: i64) -> Result<E> {
    let k = check_order(c, 2)?;
    if branch < 1 || branch > k {
        return Err(Error::InvalidParameter(format!(
            "branch must lie in 1..={k}, got {branch}"
        )));
    }
    let first = 1 - k as i64;
    if n < first {
        return Err(Error::InvalidParameter(format!(
            "index n must be >= {first}, got {n}"
        )));
    }
    // seq[idx] holds f_{idx + first}
    let len = (n - first) as usize + 1;
    let mut seq: Vec<E> = Vec::with_capacity(len);
    for idx in 0..len {
        let m = idx as i64 + first;
        let v = if m <= 0 {
            if branch as i64 == 1 - m {
                E::one()
            } else {
                E::zero()
            }
        } else {
            let mut acc = E::zero();
            for j in 1..=k {
                acc = acc.add(&c[j - 1].mul(&seq[idx - j]));
            }
            acc
        };
        seq.push(v);
    }
    Ok(seq.pop().expect("len >= 1"))
}

/// The Pell analogue of [`gen_er`], with `c = (2, 1, ..., 1)`.
pub fn gen_pell(k: usize, branch: usize, n: i64) -> Result<BigInt> {
    gen_er(&pell_coeffs(k), branch, n)
}

/// `(2, 1, ..., 1)` of length `k`.
pub fn pell_coeffs(k: usize) -> Vec<BigInt> {
    (0..k)
        .map(|j| BigInt::from(if j == 0 { 2 } else { 1 }))
        .collect()
}

fn integer_linear(initial: &[i64], coeffs: &[i64], n: usize) -> BigInt {
    // a_m = sum_j coeffs[j] * a_{m-1-j}
    let mut seq: Vec<BigInt> = initial.iter().map(|&v| BigInt::from(v)).collect();
    while seq.len() <= n {
        let m = seq.len();
        let next = coeffs
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(j, &c)| &seq[m - 1 - j] * c)
            .sum();
        seq.push(next);
    }
    seq.swap_remove(n)
}

/// Lucas numbers: `L_0 = 2`, `L_1 = 1`, `L_n = L_{n-1} + L_{n-2}`.
pub fn lucas_number(n: u64) -> BigInt {
    integer_linear(&[2, 1], &[1, 1], n as usize)
}

/// Perrin numbers: `R_0 = 3`, `R_1 = 0`, `R_2 = 2`, `R_n = R_{n-2} + R_{n-3}`.
pub fn perrin_number(n: u64) -> BigInt {
    integer_linear(&[3, 0, 2], &[0, 1, 1], n as usize)
}

/// Fibonacci numbers: `F_1 = F_2 = 1`; defined for `n >= 1`.
pub fn fibonacci_number(n: u64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "fibonacci index must be >= 1".into(),
        ));
    }
    Ok(integer_linear(&[0, 1], &[1, 1], n as usize))
}
