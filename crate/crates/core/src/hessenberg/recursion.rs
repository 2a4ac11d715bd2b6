//! Determinant and permanent of a lower-Hessenberg matrix by expansion along
//! the last row.
//!
//! With `D_m` the value for the leading `m x m` block and `D_0 = 1`,
//!
//! ```text
//! D_m = a_{m,m} D_{m-1} + sum_{r=1}^{m-1} sign(m - r) a_{m,r} (a_{r,r+1} ... a_{m-1,m}) D_{r-1}
//! ```
//!
//! where `sign(d) = (-1)^d` for the determinant and `1` for the permanent.
//! Rows are processed bottom-up, and the superdiagonal product is
//! accumulated while `r` walks left from `m - 1`, so each row costs a
//! constant number of multiplications per nonzero entry left of the
//! diagonal. On a band of width `k` that is `O(n * k)` multiplications.

use super::HessenbergMatrix;
use crate::ring::Ring;

/// Ring operations performed by one evaluation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCount {
    pub multiplications: u64,
    pub additions: u64,
}

pub fn hess_det<E: Ring>(a: &HessenbergMatrix<E>) -> E {
    expand(a, true).0
}

pub fn hess_per<E: Ring>(a: &HessenbergMatrix<E>) -> E {
    expand(a, false).0
}

pub fn hess_det_counted<E: Ring>(a: &HessenbergMatrix<E>) -> (E, OpCount) {
    expand(a, true)
}

pub fn hess_per_counted<E: Ring>(a: &HessenbergMatrix<E>) -> (E, OpCount) {
    expand(a, false)
}

fn expand<E: Ring>(a: &HessenbergMatrix<E>, alternating: bool) -> (E, OpCount) {
    let n = a.n();
    let mut ops = OpCount::default();
    // leading[m] holds the value of the leading m x m block
    let mut leading: Vec<E> = Vec::with_capacity(n + 1);
    leading.push(E::one());

    for m in 1..=n {
        let row = a.row(m);
        let mut acc = E::zero();
        let diag = &row[m - 1];
        if !diag.is_zero() {
            acc = diag.mul(&leading[m - 1]);
            ops.multiplications += 1;
        }

        // leftmost nonzero column of row m; nothing to the left contributes
        let Some(first) = row[..m - 1].iter().position(|e| !e.is_zero()) else {
            leading.push(acc);
            continue;
        };

        let mut sup: Option<E> = None;
        for r in (first + 1..m).rev() {
            let link = &a.row(r)[r];
            if link.is_zero() {
                break;
            }
            sup = Some(match sup {
                None => link.clone(),
                Some(p) => {
                    ops.multiplications += 1;
                    p.mul(link)
                }
            });
            let entry = &row[r - 1];
            if entry.is_zero() {
                continue;
            }
            let weight = sup.as_ref().expect("set above");
            let term = entry.mul(weight).mul(&leading[r - 1]);
            ops.multiplications += 2;
            ops.additions += 1;
            acc = if alternating && (m - r) % 2 == 1 {
                acc.sub(&term)
            } else {
                acc.add(&term)
            };
        }
        leading.push(acc);
    }
    (leading.pop().expect("leading[0] always present"), ops)
}
