//! Exact identity checks over parameter grids.
//!
//! Every check compares two independently computed values per grid cell:
//! a matrix evaluated by the Hessenberg recursions against a recurrence from
//! [`crate::sequences`], two recurrences against each other, or a recursion
//! against the permutation-expansion oracle. A mismatch is data, recorded in
//! the report, never an error; errors are reserved for invalid parameters.
//!
//! Cells are evaluated with rayon and collected in grid order, so the report
//! does not depend on the size of the thread pool it runs in.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hessenberg::{
    brute_det, brute_per, hess_det, hess_per, Family, HessenbergMatrix, BRUTE_FORCE_MAX_N,
};
use crate::ring::{GaussianInt, LaurentPoly, Ring};
use crate::sequences::{
    gen_er, gen_f, gen_g, gen_miles, gen_pell, gen_r, lucas_number, lucas_polys, perrin_number,
    symbolic_coeffs,
};

/// Largest dimension used for the brute-force cross-checks inside grids.
pub const ORACLE_MAX_N: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub k: Vec<usize>,
    pub n_min: i64,
    pub n_max: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub n: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trial: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellResult {
    #[serde(flatten)]
    pub cell: Cell,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(flatten)]
    pub cell: Cell,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub grid: Grid,
    pub passed: bool,
    pub cells: Vec<CellResult>,
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &CellResult> {
        self.cells.iter().filter(|c| !c.pass)
    }

    /// Concatenates the cells of several reports for the same identity.
    pub fn merge(identity: &str, reports: Vec<VerificationReport>) -> VerificationReport {
        let mut grid = Grid {
            k: Vec::new(),
            n_min: i64::MAX,
            n_max: i64::MIN,
            trials: None,
            seed: None,
        };
        let mut cells = Vec::new();
        let mut counterexample = None;
        for r in reports {
            grid.k.extend(r.grid.k);
            grid.n_min = grid.n_min.min(r.grid.n_min);
            grid.n_max = grid.n_max.max(r.grid.n_max);
            grid.trials = grid.trials.or(r.grid.trials);
            grid.seed = grid.seed.or(r.grid.seed);
            cells.extend(r.cells);
            counterexample = counterexample.or(r.counterexample);
        }
        grid.k.dedup();
        VerificationReport {
            identity: identity.to_string(),
            grid,
            passed: cells.iter().all(|c| c.pass),
            cells,
            counterexample,
            wall_time_ms: None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports are always serializable")
    }
}

/// Outcome of one cell: pass iff `expected == actual`.
struct Check {
    pass: bool,
    expected: String,
    actual: String,
}

impl Check {
    fn compare<T: PartialEq + fmt::Display>(expected: &T, actual: &T) -> Check {
        Check {
            pass: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    /// All sub-checks must pass; the first failing one is reported.
    fn all(checks: Vec<(&str, Check)>) -> Check {
        match checks.iter().position(|(_, c)| !c.pass) {
            None => Check {
                pass: true,
                expected: String::new(),
                actual: String::new(),
            },
            Some(idx) => {
                let (what, c) = &checks[idx];
                Check {
                    pass: false,
                    expected: format!("{what}: {}", c.expected),
                    actual: format!("{what}: {}", c.actual),
                }
            }
        }
    }
}

fn run_cells<F>(identity: &str, grid: Grid, cells: Vec<Cell>, f: F) -> Result<VerificationReport>
where
    F: Fn(&Cell) -> Result<Check> + Sync,
{
    let outcomes: Vec<Result<Check>> = cells.par_iter().map(&f).collect();
    let mut results = Vec::with_capacity(cells.len());
    let mut counterexample = None;
    for (cell, outcome) in cells.into_iter().zip(outcomes) {
        let check = outcome?;
        if !check.pass && counterexample.is_none() {
            counterexample = Some(Counterexample {
                cell: cell.clone(),
                expected: check.expected,
                actual: check.actual,
            });
        }
        results.push(CellResult {
            cell,
            pass: check.pass,
        });
    }
    Ok(VerificationReport {
        identity: identity.to_string(),
        grid,
        passed: results.iter().all(|c| c.pass),
        cells: results,
        counterexample,
        wall_time_ms: None,
    })
}

fn kn_cells(k: usize, ns: impl IntoIterator<Item = i64>) -> Vec<Cell> {
    ns.into_iter()
        .map(|n| Cell {
            k: Some(k),
            n,
            trial: None,
            label: None,
        })
        .collect()
}

fn kn_grid(k: usize, n_min: i64, n_max: i64) -> Grid {
    Grid {
        k: vec![k],
        n_min,
        n_max,
        trials: None,
        seed: None,
    }
}

fn require_k(k: usize, min: usize) -> Result<()> {
    if k < min {
        return Err(Error::InvalidParameter(format!(
            "order k must be >= {min}, got {k}"
        )));
    }
    Ok(())
}

fn require_exact_k(what: &str, k: usize, want: usize) -> Result<()> {
    if k != want {
        return Err(Error::InvalidParameter(format!(
            "{what} holds for k = {want} only, got {k}"
        )));
    }
    Ok(())
}

fn n_of(cell: &Cell) -> usize {
    cell.n as usize
}

fn constant_assignment<E: Ring>(values: &[i64]) -> BTreeMap<u32, E> {
    values
        .iter()
        .enumerate()
        .map(|(j, &v)| (j as u32 + 1, E::from_i64(v)))
        .collect()
}

/// Checks that the family's determinant (C, B) or permanent (H, L) equals
/// `G_{k,n}(t)` symbolically for `n = 1..=n_max`.
///
/// `n = 0` is left out: the empty matrix evaluates to 1 while `G_{k,0} = k`.
pub fn check_matrix_theorem(family: Family, k: usize, n_max: usize) -> Result<VerificationReport> {
    check_matrix_theorem_range(family, k, 1, n_max)
}

/// [`check_matrix_theorem`] over `n = n_min..=n_max`.
pub fn check_matrix_theorem_range(
    family: Family,
    k: usize,
    n_min: usize,
    n_max: usize,
) -> Result<VerificationReport> {
    require_k(k, 2)?;
    let t = symbolic_coeffs(k);
    let g = lucas_polys(&t, n_max)?;
    run_cells(
        &Identity::Matrix(family).to_string(),
        kn_grid(k, n_min as i64, n_max as i64),
        kn_cells(k, n_min as i64..=n_max as i64),
        |cell| {
            let m = family.build(k, n_of(cell))?;
            Ok(Check::compare(&g[n_of(cell)], &family.evaluate(&m)))
        },
    )
}

/// The relations between the sequence families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RemarkIdentity {
    /// Er sequence, branch 1, with `c = t`: `f^1_{n-1} = F_{k,n}(t)`.
    I,
    /// Pell branch 1: `p^1_{n-1} = F_{k,n}(2, 1, ..., 1)`.
    II,
    /// `R_{k,n}(t) = G_{k,n}(t)` at `t_1 = 0`.
    III,
    /// `f_{k,k+n-2} = F_{k,n}(1, ..., 1)`.
    IV,
    /// `L_n = G_{2,n}(1, 1)`.
    V,
    /// Perrin numbers: `R_n = G_{3,n}(0, 1, 1)`.
    VI,
    /// Er branch `k` with unit coefficients against the Miles numbers:
    /// `f^k_n = f_{k,k+n-2}`.
    ErMiles,
}

impl RemarkIdentity {
    pub const ALL: [RemarkIdentity; 7] = [
        RemarkIdentity::I,
        RemarkIdentity::II,
        RemarkIdentity::III,
        RemarkIdentity::IV,
        RemarkIdentity::V,
        RemarkIdentity::VI,
        RemarkIdentity::ErMiles,
    ];

    pub fn id(self) -> &'static str {
        match self {
            RemarkIdentity::I => "remark-i",
            RemarkIdentity::II => "remark-ii",
            RemarkIdentity::III => "remark-iii",
            RemarkIdentity::IV => "remark-iv",
            RemarkIdentity::V => "remark-v",
            RemarkIdentity::VI => "remark-vi",
            RemarkIdentity::ErMiles => "er-miles",
        }
    }

    /// Whether the identity is stated for order `k`.
    pub fn applies_to(self, k: usize) -> bool {
        match self {
            RemarkIdentity::III => k >= 3,
            RemarkIdentity::V => k == 2,
            RemarkIdentity::VI => k == 3,
            _ => k >= 2,
        }
    }
}

pub fn check_remark(
    identity: RemarkIdentity,
    k: usize,
    n_max: usize,
) -> Result<VerificationReport> {
    require_k(k, 2)?;
    let t = symbolic_coeffs(k);
    let ones = vec![1i64; k];
    let n_max = n_max as i64;
    let id = identity.id();
    match identity {
        RemarkIdentity::I => run_cells(id, kn_grid(k, 1, n_max), kn_cells(k, 1..=n_max), |cell| {
            Ok(Check::compare(
                &gen_f(&t, cell.n)?,
                &gen_er(&t, 1, cell.n - 1)?,
            ))
        }),
        RemarkIdentity::II => {
            let mut pell_point = vec![1i64; k];
            pell_point[0] = 2;
            let at: BTreeMap<u32, BigInt> = constant_assignment(&pell_point);
            run_cells(id, kn_grid(k, 1, n_max), kn_cells(k, 1..=n_max), |cell| {
                let f = gen_f(&t, cell.n)?.substitute(&at)?;
                Ok(Check::compare(&f, &gen_pell(k, 1, cell.n - 1)?))
            })
        }
        RemarkIdentity::III => {
            require_k(k, 3)?;
            let zero_t1: BTreeMap<u32, LaurentPoly> = [(1, LaurentPoly::zero())].into();
            run_cells(id, kn_grid(k, 0, n_max), kn_cells(k, 0..=n_max), |cell| {
                let g = gen_g(&t, cell.n)?.partial_substitute(&zero_t1)?;
                Ok(Check::compare(&g, &gen_r(&t, cell.n)?))
            })
        }
        RemarkIdentity::IV => {
            let at: BTreeMap<u32, BigInt> = constant_assignment(&ones);
            run_cells(id, kn_grid(k, 1, n_max), kn_cells(k, 1..=n_max), |cell| {
                let f = gen_f(&t, cell.n)?.substitute(&at)?;
                Ok(Check::compare(&f, &gen_miles(k, k as i64 + cell.n - 2)?))
            })
        }
        RemarkIdentity::V => {
            require_exact_k(id, k, 2)?;
            let at: BTreeMap<u32, BigInt> = constant_assignment(&ones);
            run_cells(id, kn_grid(k, 0, n_max), kn_cells(k, 0..=n_max), |cell| {
                let g = gen_g(&t, cell.n)?.substitute(&at)?;
                Ok(Check::compare(&lucas_number(cell.n as u64), &g))
            })
        }
        RemarkIdentity::VI => {
            require_exact_k(id, k, 3)?;
            let at: BTreeMap<u32, BigInt> = constant_assignment(&[0, 1, 1]);
            run_cells(id, kn_grid(k, 0, n_max), kn_cells(k, 0..=n_max), |cell| {
                let g = gen_g(&t, cell.n)?.substitute(&at)?;
                Ok(Check::compare(&perrin_number(cell.n as u64), &g))
            })
        }
        RemarkIdentity::ErMiles => {
            let c: Vec<BigInt> = vec![BigInt::from(1); k];
            run_cells(id, kn_grid(k, 1, n_max), kn_cells(k, 1..=n_max), |cell| {
                let miles = gen_miles(k, k as i64 + cell.n - 2)?;
                Ok(Check::compare(&miles, &gen_er(&c, k, cell.n)?))
            })
        }
    }
}

/// Checks that `G_n = t_1 G_{n-1} + ... + t_k G_{n-k}` for `n = k..=n_max`,
/// where `G` is generated from the Fibonacci polynomials.
pub fn check_machenry(k: usize, n_max: usize) -> Result<VerificationReport> {
    require_k(k, 2)?;
    let t = symbolic_coeffs(k);
    let g = lucas_polys(&t, n_max)?;
    let ns = k as i64..=n_max as i64;
    run_cells(
        "machenry",
        kn_grid(k, k as i64, n_max as i64),
        kn_cells(k, ns),
        |cell| {
            let n = n_of(cell);
            let recurrence = (1..=k).fold(LaurentPoly::zero(), |acc, j| {
                &acc + &(&t[j - 1] * &g[n - j])
            });
            Ok(Check::compare(&recurrence, &g[n]))
        },
    )
}

/// Matrix-level specializations. Entries are specialized first and the
/// matrix is then evaluated in the smaller ring, which is a different route
/// from specializing `G_{k,n}(t)`.
///
/// | corollary | families | k      | point                       | target             |
/// |-----------|----------|--------|-----------------------------|--------------------|
/// | 1         | C, B     | 2      | `t = (1, 1)`                | Lucas numbers      |
/// | 2         | C, B     | `>= 3` | `t_1 = 0`, rest symbolic    | `R_{k,n}(t)`       |
/// | 3         | C, B     | 3      | `t = (0, 1, 1)`             | Perrin numbers     |
/// | 4, 5, 6   | H, L     | as 1, 2, 3                                           |
pub fn check_corollary(corollary: u8, k: usize, n_max: usize) -> Result<VerificationReport> {
    let families = match corollary {
        1..=3 => [Family::C, Family::B],
        4..=6 => [Family::H, Family::L],
        _ => {
            return Err(Error::InvalidParameter(format!(
                "corollary must be in 1..=6, got {corollary}"
            )))
        }
    };
    let id = format!("corollary-{corollary}");
    let grid = kn_grid(k, 1, n_max as i64);
    let cells = kn_cells(k, 1..=n_max as i64);
    match corollary {
        1 | 3 | 4 | 6 => {
            let (point, target): (Vec<i64>, fn(u64) -> BigInt) = if matches!(corollary, 1 | 4) {
                require_exact_k(&id, k, 2)?;
                (vec![1, 1], lucas_number)
            } else {
                require_exact_k(&id, k, 3)?;
                (vec![0, 1, 1], perrin_number)
            };
            let at: BTreeMap<u32, GaussianInt> = constant_assignment(&point);
            run_cells(&id, grid, cells, |cell| {
                let expected = GaussianInt::from(target(cell.n as u64));
                let mut checks = Vec::new();
                for family in families {
                    let m = family
                        .build(k, n_of(cell))?
                        .try_map(|e| e.substitute(&at))?;
                    let value = if family.uses_permanent() {
                        hess_per(&m)
                    } else {
                        hess_det(&m)
                    };
                    checks.push((family_label(family), Check::compare(&expected, &value)));
                }
                Ok(Check::all(checks))
            })
        }
        _ => {
            require_k(k, 3)?;
            let t = symbolic_coeffs(k);
            let zero_t1: BTreeMap<u32, LaurentPoly> = [(1, LaurentPoly::zero())].into();
            run_cells(&id, grid, cells, |cell| {
                let expected = gen_r(&t, cell.n)?;
                let mut checks = Vec::new();
                for family in families {
                    let m = family
                        .build(k, n_of(cell))?
                        .try_map(|e| e.partial_substitute(&zero_t1))?;
                    checks.push((
                        family_label(family),
                        Check::compare(&expected, &family.evaluate(&m)),
                    ));
                }
                Ok(Check::all(checks))
            })
        }
    }
}

fn family_label(f: Family) -> &'static str {
    match f {
        Family::C => "det(C)",
        Family::B => "det(B)",
        Family::H => "per(H)",
        Family::L => "per(L)",
    }
}

/// Checks that every family result for `n = 0..=n_max` has only real
/// coefficients and no negative exponents.
pub fn check_reality(k: usize, n_max: usize) -> Result<VerificationReport> {
    require_k(k, 2)?;
    run_cells(
        "reality",
        kn_grid(k, 0, n_max as i64),
        kn_cells(k, 0..=n_max as i64),
        |cell| {
            let mut checks = Vec::new();
            for family in Family::ALL {
                let v = family.evaluate(&family.build(k, n_of(cell))?);
                checks.push((
                    family_label(family),
                    Check::compare(&"plain polynomial", &plain_label(&v)),
                ));
            }
            Ok(Check::all(checks))
        },
    )
}

fn plain_label(p: &LaurentPoly) -> &'static str {
    if p.is_plain_polynomial() {
        "plain polynomial"
    } else {
        "not a plain polynomial"
    }
}

/// Random lower-Hessenberg integer matrix with every representable entry
/// uniform in `[-3, 3]`.
pub fn random_hessenberg(rng: &mut impl Rng, n: usize) -> HessenbergMatrix<BigInt> {
    HessenbergMatrix::from_fn(n, |_, _| BigInt::from(rng.gen_range(-3i64..=3)))
}

fn seeded_matrices(
    trials: usize,
    n_min: usize,
    n_max: usize,
    seed: u64,
) -> Vec<HessenbergMatrix<BigInt>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let n = rng.gen_range(n_min..=n_max);
            random_hessenberg(&mut rng, n)
        })
        .collect()
}

fn trial_cells(mats: &[HessenbergMatrix<BigInt>]) -> Vec<Cell> {
    mats.iter()
        .enumerate()
        .map(|(i, m)| Cell {
            k: None,
            n: m.n() as i64,
            trial: Some(i),
            label: None,
        })
        .collect()
}

/// For `trials` seeded random matrices with `1 <= n <= n_max`, checks
/// `det(flip(A)) = per(A)` and `per(flip(A)) = det(A)`; matrices with
/// `n <= 6` are also checked against the permutation expansion.
pub fn check_duality(trials: usize, n_max: usize, seed: u64) -> Result<VerificationReport> {
    if n_max < 1 {
        return Err(Error::InvalidParameter("n_max must be >= 1".into()));
    }
    let mats = seeded_matrices(trials, 1, n_max, seed);
    let grid = Grid {
        k: Vec::new(),
        n_min: 1,
        n_max: n_max as i64,
        trials: Some(trials),
        seed: Some(seed),
    };
    run_cells("detper-flip", grid, trial_cells(&mats), |cell| {
        let a = &mats[cell.trial.expect("trial cells")];
        let b = a.flip_superdiagonal();
        let (det_a, per_a) = (hess_det(a), hess_per(a));
        let mut checks = vec![
            (
                "det(flip A) = per(A)",
                Check::compare(&per_a, &hess_det(&b)),
            ),
            (
                "per(flip A) = det(A)",
                Check::compare(&det_a, &hess_per(&b)),
            ),
        ];
        if a.n() <= ORACLE_MAX_N {
            let dense = a.to_dense();
            checks.push(("brute det(A)", Check::compare(&brute_det(&dense)?, &det_a)));
            checks.push(("brute per(A)", Check::compare(&brute_per(&dense)?, &per_a)));
        }
        Ok(Check::all(checks))
    })
}

/// `hess_det = brute_det` and `hess_per = brute_per` on every family matrix
/// with order in `ks` and `n <= n_max`, plus `trials` seeded random integer
/// matrices with `n <= n_max`.
pub fn check_oracle(
    ks: &[usize],
    n_max: usize,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport> {
    if n_max > BRUTE_FORCE_MAX_N {
        return Err(Error::DimensionTooLarge {
            n: n_max,
            max: BRUTE_FORCE_MAX_N,
        });
    }
    for &k in ks {
        require_k(k, 2)?;
    }
    let mut family_mats = Vec::new();
    let mut cells = Vec::new();
    for &k in ks {
        for family in Family::ALL {
            for n in 0..=n_max {
                family_mats.push(family.build(k, n)?);
                cells.push(Cell {
                    k: Some(k),
                    n: n as i64,
                    trial: None,
                    label: Some(family.to_string()),
                });
            }
        }
    }
    let random = seeded_matrices(trials, 0, n_max, seed);
    cells.extend(trial_cells(&random));
    let grid = Grid {
        k: ks.to_vec(),
        n_min: 0,
        n_max: n_max as i64,
        trials: Some(trials),
        seed: Some(seed),
    };

    fn both<E: Ring>(m: &HessenbergMatrix<E>) -> Result<Check> {
        let dense = m.to_dense();
        Ok(Check::all(vec![
            ("det", Check::compare(&brute_det(&dense)?, &hess_det(m))),
            ("per", Check::compare(&brute_per(&dense)?, &hess_per(m))),
        ]))
    }

    let n_family = family_mats.len();
    run_cells("oracle", grid, cells, |cell| match cell.trial {
        Some(i) => both(&random[i]),
        None => {
            let idx = cells_index(ks, n_max, cell);
            debug_assert!(idx < n_family);
            both(&family_mats[idx])
        }
    })
}

fn cells_index(ks: &[usize], n_max: usize, cell: &Cell) -> usize {
    let k_pos = ks
        .iter()
        .position(|&k| Some(k) == cell.k)
        .expect("k from grid");
    let f_pos = Family::ALL
        .iter()
        .position(|f| Some(f.to_string()) == cell.label)
        .expect("family label");
    (k_pos * Family::ALL.len() + f_pos) * (n_max + 1) + cell.n as usize
}

/// Names accepted by [`Identity::from_str`].
pub const IDENTITY_NAMES: &[&str] = &[
    "det-C",
    "det-B",
    "per-H",
    "per-L",
    "detper-flip",
    "remark-i",
    "remark-ii",
    "remark-iii",
    "remark-iv",
    "remark-v",
    "remark-vi",
    "er-miles",
    "machenry",
    "corollary-1",
    "corollary-2",
    "corollary-3",
    "corollary-4",
    "corollary-5",
    "corollary-6",
    "reality",
    "oracle",
];

/// A named identity that can be checked over a grid of orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Matrix(Family),
    DetPerFlip,
    Remark(RemarkIdentity),
    MacHenry,
    Corollary(u8),
    Reality,
    Oracle,
}

impl Identity {
    /// Orders checked when none are requested.
    pub fn default_orders(self) -> Vec<usize> {
        match self {
            Identity::Remark(RemarkIdentity::V)
            | Identity::Corollary(1)
            | Identity::Corollary(4) => {
                vec![2]
            }
            Identity::Remark(RemarkIdentity::VI)
            | Identity::Corollary(3)
            | Identity::Corollary(6) => {
                vec![3]
            }
            Identity::Remark(RemarkIdentity::III)
            | Identity::Corollary(2)
            | Identity::Corollary(5) => {
                vec![3, 4, 5]
            }
            Identity::DetPerFlip => Vec::new(),
            Identity::Oracle => vec![2, 3, 4],
            _ => vec![2, 3, 4, 5],
        }
    }

    /// Runs the check for each order in `ks` and merges the results.
    /// `trials` and `seed` only matter for the randomized identities.
    pub fn run(
        self,
        ks: &[usize],
        n_max: usize,
        trials: usize,
        seed: u64,
    ) -> Result<VerificationReport> {
        let per_k =
            |f: &dyn Fn(usize) -> Result<VerificationReport>| -> Result<VerificationReport> {
                let reports = ks.iter().map(|&k| f(k)).collect::<Result<Vec<_>>>()?;
                Ok(VerificationReport::merge(&self.to_string(), reports))
            };
        match self {
            Identity::Matrix(family) => per_k(&|k| check_matrix_theorem(family, k, n_max)),
            Identity::Remark(r) => per_k(&|k| check_remark(r, k, n_max)),
            Identity::MacHenry => per_k(&|k| check_machenry(k, n_max)),
            Identity::Corollary(c) => per_k(&|k| check_corollary(c, k, n_max)),
            Identity::Reality => per_k(&|k| check_reality(k, n_max)),
            Identity::DetPerFlip => check_duality(trials, n_max, seed),
            Identity::Oracle => check_oracle(ks, n_max, trials, seed),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identity::Matrix(fam) if fam.uses_permanent() => write!(f, "per-{fam}"),
            Identity::Matrix(fam) => write!(f, "det-{fam}"),
            Identity::DetPerFlip => f.write_str("detper-flip"),
            Identity::Remark(r) => f.write_str(r.id()),
            Identity::MacHenry => f.write_str("machenry"),
            Identity::Corollary(c) => write!(f, "corollary-{c}"),
            Identity::Reality => f.write_str("reality"),
            Identity::Oracle => f.write_str("oracle"),
        }
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || {
            Error::InvalidParameter(format!(
                "unknown identity {s:?}; expected one of {}",
                IDENTITY_NAMES.join(", ")
            ))
        };
        let lower = s.to_ascii_lowercase();
        if let Some(rest) = lower.strip_prefix("corollary-") {
            return match rest.parse::<u8>() {
                Ok(c @ 1..=6) => Ok(Identity::Corollary(c)),
                _ => Err(unknown()),
            };
        }
        if let Some(r) = RemarkIdentity::ALL.iter().find(|r| r.id() == lower) {
            return Ok(Identity::Remark(*r));
        }
        Ok(match lower.as_str() {
            "det-c" => Identity::Matrix(Family::C),
            "det-b" => Identity::Matrix(Family::B),
            "per-h" => Identity::Matrix(Family::H),
            "per-l" => Identity::Matrix(Family::L),
            "detper-flip" => Identity::DetPerFlip,
            "machenry" => Identity::MacHenry,
            "reality" => Identity::Reality,
            "oracle" => Identity::Oracle,
            _ => return Err(unknown()),
        })
    }
}
