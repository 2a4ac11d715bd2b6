//! Python bindings: `import hesslucas`.

use std::collections::BTreeMap;

use hesslucas::hessenberg::{brute_det, brute_per, Family, HessenbergMatrix};
use hesslucas::ring::{parse_poly, LaurentPoly, Ring, RingValue};
use hesslucas::sequences::{SequenceFamily, SequenceSpec};
use hesslucas::verify::Identity;
use hesslucas::{hess_det, hess_per, Error};
use num_bigint::BigInt;
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Python value for a ring element: `int` when it is a real constant,
/// otherwise an exact `Poly`.
fn ring_value_to_py<'py>(py: Python<'py>, v: RingValue) -> PyResult<Bound<'py, PyAny>> {
    match v.simplify() {
        RingValue::Int(i) => Ok(i.into_pyobject(py)?.into_any()),
        other => Ok(Bound::new(
            py,
            Poly {
                inner: other.to_poly(),
            },
        )?
        .into_any()),
    }
}

/// Accepts `Poly`, `int` or a polynomial string.
fn to_poly(obj: &Bound<'_, PyAny>) -> PyResult<LaurentPoly> {
    if let Ok(p) = obj.extract::<PyRef<Poly>>() {
        return Ok(p.inner.clone());
    }
    if let Ok(i) = obj.extract::<BigInt>() {
        return Ok(LaurentPoly::from(i));
    }
    if let Ok(s) = obj.extract::<String>() {
        return parse_poly(&s).map_err(err);
    }
    Err(PyTypeError::new_err("expected Poly, int or str"))
}

fn assignment(values: &Bound<'_, PyDict>) -> PyResult<BTreeMap<u32, LaurentPoly>> {
    let mut out = BTreeMap::new();
    for (key, value) in values.iter() {
        let idx: u32 = match key.extract::<u32>() {
            Ok(i) => i,
            Err(_) => {
                let name: String = key.extract()?;
                name.strip_prefix('t')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| PyValueError::new_err(format!("bad variable name {name:?}")))?
            }
        };
        if idx == 0 {
            return Err(PyValueError::new_err("variables are numbered from 1"));
        }
        out.insert(idx, to_poly(&value)?);
    }
    Ok(out)
}

/// Laurent polynomial in `t1, t2, ...` with Gaussian-integer coefficients.
#[pyclass(module = "hesslucas", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Poly {
    inner: LaurentPoly,
}

#[pymethods]
impl Poly {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Poly {
            inner: parse_poly(text).map_err(err)?,
        })
    }

    #[staticmethod]
    fn var(j: u32) -> PyResult<Self> {
        if j == 0 {
            return Err(PyValueError::new_err("variables are numbered from 1"));
        }
        Ok(Poly {
            inner: LaurentPoly::var(j),
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Poly {
            inner: LaurentPoly::from_json_str(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    fn is_plain_polynomial(&self) -> bool {
        self.inner.is_plain_polynomial()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// Substitutes `{index or "tN": value}`. Unassigned variables stay
    /// symbolic; a real constant result comes back as `int`.
    fn substitute<'py>(
        &self,
        py: Python<'py>,
        values: &Bound<'py, PyDict>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let p = self
            .inner
            .partial_substitute(&assignment(values)?)
            .map_err(err)?;
        ring_value_to_py(py, RingValue::Poly(p))
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Poly> {
        Ok(Poly {
            inner: &self.inner + &to_poly(other)?,
        })
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Poly> {
        self.__add__(other)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Poly> {
        Ok(Poly {
            inner: &self.inner - &to_poly(other)?,
        })
    }

    fn __rsub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Poly> {
        Ok(Poly {
            inner: &to_poly(other)? - &self.inner,
        })
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Poly> {
        Ok(Poly {
            inner: &self.inner * &to_poly(other)?,
        })
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Poly> {
        self.__mul__(other)
    }

    fn __neg__(&self) -> Poly {
        Poly {
            inner: -&self.inner,
        }
    }

    fn __pow__(&self, exp: i64, _modulo: Option<i64>) -> PyResult<Poly> {
        Ring::pow(&self.inner, exp)
            .map(|inner| Poly { inner })
            .ok_or_else(|| PyValueError::new_err("negative power of a non-unit"))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.inner)
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.to_string().hash(&mut h);
        h.finish()
    }
}

/// Lower-Hessenberg matrix with polynomial entries.
#[pyclass(module = "hesslucas", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Matrix {
    inner: HessenbergMatrix<LaurentPoly>,
}

#[pymethods]
impl Matrix {
    /// One of the families `"C"`, `"B"`, `"H"`, `"L"`.
    #[staticmethod]
    fn family(name: &str, k: usize, n: usize) -> PyResult<Self> {
        let f: Family = name.parse().map_err(err)?;
        Ok(Matrix {
            inner: f.build(k, n).map_err(err)?,
        })
    }

    /// Dense rows of `Poly`, `int` or `str` entries.
    #[staticmethod]
    fn from_rows(rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        let dense = rows
            .iter()
            .map(|row| row.iter().map(to_poly).collect::<PyResult<Vec<_>>>())
            .collect::<PyResult<Vec<_>>>()?;
        Ok(Matrix {
            inner: HessenbergMatrix::from_dense(dense).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(Matrix {
            inner: hesslucas::hessenberg::matrix_from_json(&v).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    /// Entry `(r, s)`, 1-based.
    fn entry(&self, r: usize, s: usize) -> PyResult<Poly> {
        if r == 0 || s == 0 || r > self.inner.n() || s > self.inner.n() {
            return Err(PyValueError::new_err(format!(
                "index ({r}, {s}) out of range"
            )));
        }
        Ok(Poly {
            inner: self.inner.entry(r, s),
        })
    }

    fn det(&self) -> Poly {
        Poly {
            inner: hess_det(&self.inner),
        }
    }

    fn per(&self) -> Poly {
        Poly {
            inner: hess_per(&self.inner),
        }
    }

    /// Permutation-expansion determinant (n <= 8).
    fn brute_det(&self) -> PyResult<Poly> {
        Ok(Poly {
            inner: brute_det(&self.inner.to_dense()).map_err(err)?,
        })
    }

    /// Permutation-expansion permanent (n <= 8).
    fn brute_per(&self) -> PyResult<Poly> {
        Ok(Poly {
            inner: brute_per(&self.inner.to_dense()).map_err(err)?,
        })
    }

    fn flip(&self) -> Matrix {
        Matrix {
            inner: self.inner.flip_superdiagonal(),
        }
    }

    fn substitute(&self, values: &Bound<'_, PyDict>) -> PyResult<Matrix> {
        let a = assignment(values)?;
        Ok(Matrix {
            inner: self
                .inner
                .try_map(|e| e.partial_substitute(&a))
                .map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn to_latex(&self) -> String {
        self.inner.to_latex()
    }

    fn __str__(&self) -> String {
        self.inner.to_text()
    }

    fn __repr__(&self) -> String {
        format!("Matrix(n={})", self.inner.n())
    }
}

/// Exact determinant of an integer lower-Hessenberg matrix given as rows.
#[pyfunction]
fn det(rows: Vec<Vec<BigInt>>) -> PyResult<BigInt> {
    Ok(hess_det(&HessenbergMatrix::from_dense(rows).map_err(err)?))
}

/// Exact permanent of an integer lower-Hessenberg matrix given as rows.
#[pyfunction]
fn per(rows: Vec<Vec<BigInt>>) -> PyResult<BigInt> {
    Ok(hess_per(&HessenbergMatrix::from_dense(rows).map_err(err)?))
}

/// Term `n` of a sequence family (`"F"`, `"G"`, `"R"`, `"miles"`, `"er"`,
/// `"pell"`, `"fibonacci"`, `"lucas"`, `"perrin"`).
#[pyfunction]
#[pyo3(signature = (family, n, k = 2, branch = None, coeffs = None))]
fn term<'py>(
    py: Python<'py>,
    family: &str,
    n: i64,
    k: usize,
    branch: Option<usize>,
    coeffs: Option<&Bound<'py, PyDict>>,
) -> PyResult<Bound<'py, PyAny>> {
    let family: SequenceFamily = family.parse().map_err(err)?;
    let mut spec = SequenceSpec::new(family, k).map_err(err)?;
    if let Some(b) = branch {
        spec = spec.with_branch(b).map_err(err)?;
    }
    if let Some(c) = coeffs {
        for (j, v) in assignment(c)? {
            spec = spec.with_coeff(j as usize, v).map_err(err)?;
        }
    }
    ring_value_to_py(py, spec.term(n).map_err(err)?)
}

/// Runs a named identity check and returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (identity, k = None, n_max = 10, trials = 200, seed = 42))]
fn verify<'py>(
    py: Python<'py>,
    identity: &str,
    k: Option<Vec<usize>>,
    n_max: usize,
    trials: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let id: Identity = identity.parse().map_err(err)?;
    let ks = k.unwrap_or_else(|| id.default_orders());
    let report = py
        .detach(|| id.run(&ks, n_max, trials, seed))
        .map_err(err)?;
    let text = report.to_json().to_string();
    py.import("json")?.call_method1("loads", (text,))
}

#[pymodule]
#[pyo3(name = "hesslucas")]
fn hesslucas_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Poly>()?;
    m.add_class::<Matrix>()?;
    m.add_function(wrap_pyfunction!(det, m)?)?;
    m.add_function(wrap_pyfunction!(per, m)?)?;
    m.add_function(wrap_pyfunction!(term, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
