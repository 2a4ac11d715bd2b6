//! Lower-Hessenberg matrices over an exact ring.
//!
//! All public indices are 1-based: `(r, s)` is row `r`, column `s`.

mod brute;
mod families;
mod recursion;
mod render;

pub use brute::{brute_det, brute_det_counted, brute_per, brute_per_counted, BRUTE_FORCE_MAX_N};
pub use families::{build_b, build_c, build_h, build_l, Family};
pub use recursion::{hess_det, hess_det_counted, hess_per, hess_per_counted, OpCount};
pub use render::{matrix_from_json, matrix_to_json, MatrixEntry};

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Square lower-Hessenberg matrix: `a_{rs} = 0` whenever `s - r > 1`.
///
/// Row `r` stores only columns `1..=min(r + 1, n)`, so entries above the
/// superdiagonal cannot be represented at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessenbergMatrix<E> {
    n: usize,
    rows: Vec<Vec<E>>,
}

impl<E: Ring> HessenbergMatrix<E> {
    pub fn zeros(n: usize) -> Self {
        let rows = (1..=n).map(|r| vec![E::zero(); (r + 1).min(n)]).collect();
        HessenbergMatrix { n, rows }
    }

    /// Fills every representable position `(r, s)`, `s <= r + 1`, from `f`.
    pub fn from_fn<F: FnMut(usize, usize) -> E>(n: usize, mut f: F) -> Self {
        let rows = (1..=n)
            .map(|r| (1..=(r + 1).min(n)).map(|s| f(r, s)).collect())
            .collect();
        HessenbergMatrix { n, rows }
    }

    /// Fallible variant of [`HessenbergMatrix::from_fn`].
    pub fn try_from_fn<F: FnMut(usize, usize) -> Result<E>>(n: usize, mut f: F) -> Result<Self> {
        let mut rows = Vec::with_capacity(n);
        for r in 1..=n {
            let row = (1..=(r + 1).min(n))
                .map(|s| f(r, s))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Ok(HessenbergMatrix { n, rows })
    }

    /// Accepts a dense square matrix whose entries above the superdiagonal
    /// are all zero.
    pub fn from_dense(dense: Vec<Vec<E>>) -> Result<Self> {
        let n = dense.len();
        let mut rows = Vec::with_capacity(n);
        for (r0, mut row) in dense.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedMatrix(format!(
                    "row {} has {} entries, expected {n}",
                    r0 + 1,
                    row.len()
                )));
            }
            let keep = (r0 + 2).min(n);
            if let Some(s0) = row[keep..].iter().position(|e| !e.is_zero()) {
                return Err(Error::MalformedMatrix(format!(
                    "nonzero entry at ({}, {}) above the superdiagonal",
                    r0 + 1,
                    keep + s0 + 1
                )));
            }
            row.truncate(keep);
            rows.push(row);
        }
        Ok(HessenbergMatrix { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(r, s)`; `None` outside the matrix or above the superdiagonal
    /// (where the value is structurally zero).
    pub fn get(&self, r: usize, s: usize) -> Option<&E> {
        if r == 0 || s == 0 {
            return None;
        }
        self.rows.get(r - 1)?.get(s - 1)
    }

    /// Entry `(r, s)` as a value, zero above the superdiagonal.
    pub fn entry(&self, r: usize, s: usize) -> E {
        assert!(
            (1..=self.n).contains(&r) && (1..=self.n).contains(&s),
            "index ({r}, {s}) out of range for n = {}",
            self.n
        );
        self.get(r, s).cloned().unwrap_or_else(E::zero)
    }

    pub fn set(&mut self, r: usize, s: usize, value: E) -> Result<()> {
        if r == 0 || s == 0 || r > self.n || s > self.n {
            return Err(Error::MalformedMatrix(format!(
                "index ({r}, {s}) out of range"
            )));
        }
        if s > r + 1 {
            return Err(Error::MalformedMatrix(format!(
                "({r}, {s}) lies above the superdiagonal"
            )));
        }
        self.rows[r - 1][s - 1] = value;
        Ok(())
    }

    /// Stored entries of row `r` (columns `1..=min(r + 1, n)`).
    pub fn row(&self, r: usize) -> &[E] {
        &self.rows[r - 1]
    }

    pub fn to_dense(&self) -> Vec<Vec<E>> {
        self.rows
            .iter()
            .map(|row| {
                let mut full = row.clone();
                full.resize(self.n, E::zero());
                full
            })
            .collect()
    }

    pub fn map<F: Ring>(&self, mut f: impl FnMut(&E) -> F) -> HessenbergMatrix<F> {
        HessenbergMatrix {
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(&mut f).collect())
                .collect(),
        }
    }

    pub fn try_map<F: Ring>(
        &self,
        mut f: impl FnMut(&E) -> Result<F>,
    ) -> Result<HessenbergMatrix<F>> {
        let mut rows = Vec::with_capacity(self.n);
        for row in &self.rows {
            rows.push(row.iter().map(&mut f).collect::<Result<Vec<_>>>()?);
        }
        Ok(HessenbergMatrix { n: self.n, rows })
    }

    /// Negates the superdiagonal and leaves everything else unchanged. The
    /// determinant of the result is the permanent of `self`, and vice versa.
    pub fn flip_superdiagonal(&self) -> Self {
        let mut out = self.clone();
        for r in 1..self.n {
            let e = &mut out.rows[r - 1][r];
            *e = e.neg();
        }
        out
    }

    /// Width of the band below the diagonal: the largest `r - s + 1` over
    /// nonzero entries with `s <= r` (0 for a matrix with no such entries).
    pub fn lower_bandwidth(&self) -> usize {
        let mut width = 0;
        for (r0, row) in self.rows.iter().enumerate() {
            if let Some(s0) = row.iter().take(r0 + 1).position(|e| !e.is_zero()) {
                width = width.max(r0 - s0 + 1);
            }
        }
        width
    }
}
