//! Matrix JSON (`{"n":N,"entries":[[...],...]}`, dense row-major), LaTeX
//! `bmatrix` and plain-text renderings.

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::HessenbergMatrix;
use crate::error::{Error, Result};
use crate::ring::{poly_from_json, poly_to_json, GaussianInt, LaurentPoly, PolyJson, Ring};

/// Ring elements that can appear as matrix entries in the external formats.
pub trait MatrixEntry: Ring {
    fn to_json_value(&self) -> Value;
    fn from_json_value(v: &Value) -> Result<Self>;
    fn to_latex(&self) -> String;
}

impl MatrixEntry for BigInt {
    fn to_json_value(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json_value(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s
                .parse()
                .map_err(|_| Error::Json(format!("not a decimal integer: {s:?}"))),
            Value::Number(n) if n.is_i64() => Ok(BigInt::from(n.as_i64().expect("checked"))),
            other => Err(Error::Json(format!(
                "expected an integer entry, got {other}"
            ))),
        }
    }

    fn to_latex(&self) -> String {
        self.to_string()
    }
}

impl MatrixEntry for LaurentPoly {
    fn to_json_value(&self) -> Value {
        serde_json::to_value(poly_to_json(self)).expect("polynomial json is always serializable")
    }

    fn from_json_value(v: &Value) -> Result<Self> {
        match v {
            Value::Object(_) => {
                let j: PolyJson = serde_json::from_value(v.clone())?;
                poly_from_json(&j)
            }
            // bare integers are constant polynomials
            _ => BigInt::from_json_value(v).map(LaurentPoly::from),
        }
    }

    fn to_latex(&self) -> String {
        poly_latex(self)
    }
}

pub fn matrix_to_json<E: MatrixEntry>(m: &HessenbergMatrix<E>) -> Value {
    let entries: Vec<Value> = m
        .to_dense()
        .iter()
        .map(|row| Value::Array(row.iter().map(E::to_json_value).collect()))
        .collect();
    json!({ "n": m.n(), "entries": entries })
}

pub fn matrix_from_json<E: MatrixEntry>(v: &Value) -> Result<HessenbergMatrix<E>> {
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Json("missing or invalid \"n\"".into()))? as usize;
    let rows = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("missing \"entries\" array".into()))?;
    if rows.len() != n {
        return Err(Error::MalformedMatrix(format!(
            "expected {n} rows, found {}",
            rows.len()
        )));
    }
    let mut dense = Vec::with_capacity(n);
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Json("matrix rows must be arrays".into()))?;
        dense.push(
            row.iter()
                .map(E::from_json_value)
                .collect::<Result<Vec<E>>>()?,
        );
    }
    HessenbergMatrix::from_dense(dense)
}

impl<E: MatrixEntry> HessenbergMatrix<E> {
    pub fn to_json(&self) -> Value {
        matrix_to_json(self)
    }

    /// `\begin{bmatrix} ... \end{bmatrix}`, one matrix row per line.
    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\begin{bmatrix}\n");
        for (idx, row) in self.to_dense().iter().enumerate() {
            let cells: Vec<String> = row.iter().map(E::to_latex).collect();
            out.push_str(&cells.join(" & "));
            if idx + 1 < self.n() {
                out.push_str(" \\\\");
            }
            out.push('\n');
        }
        out.push_str("\\end{bmatrix}");
        out
    }

    /// Nested-list text form, e.g. `[[t1, i*t2],\n [2*i, t1]]`.
    pub fn to_text(&self) -> String {
        let rows: Vec<String> = self
            .to_dense()
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(",\n "))
    }
}

fn latex_coeff(c: &GaussianInt) -> String {
    // i is written without a multiplication sign: 2i, -i, (1+2i)
    c.to_string().replace("*i", "i")
}

fn latex_monomial<I: Iterator<Item = (u32, i64)>>(vars: I) -> String {
    vars.map(|(v, e)| {
        if e == 1 {
            format!("t_{{{v}}}")
        } else {
            format!("t_{{{v}}}^{{{e}}}")
        }
    })
    .collect()
}

fn poly_latex(p: &LaurentPoly) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (mono, coeff)) in p.terms().enumerate() {
        let num = latex_monomial(mono.iter().filter(|&(_, e)| e > 0));
        let den = latex_monomial(mono.iter().filter(|&(_, e)| e < 0).map(|(v, e)| (v, -e)));
        let body = match (num.is_empty(), den.is_empty()) {
            (true, true) => String::new(),
            (false, true) => num,
            (true, false) => format!("\\frac{{1}}{{{den}}}"),
            (false, false) => format!("\\frac{{{num}}}{{{den}}}"),
        };
        let mut c = latex_coeff(coeff);
        let mixed = !coeff.is_real() && !Ring::is_zero(coeff.re());
        if mixed {
            c = format!("({c})");
        }
        let term = match (body.is_empty(), c.as_str()) {
            (true, _) => c,
            (false, "1") => body,
            (false, "-1") => format!("-{body}"),
            (false, _) => format!("{c}{body}"),
        };
        match (idx, term.strip_prefix('-')) {
            (0, _) => out.push_str(&term),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hessenberg::{build_b, build_c, build_h};
    use crate::ring::parse_poly;

    #[test]
    fn latex_of_worked_example_b() {
        let b = build_b(4, 5).unwrap();
        let expected = "\\begin{bmatrix}\n\
t_{1} & -t_{2} & 0 & 0 & 0 \\\\\n\
2 & t_{1} & -t_{2} & 0 & 0 \\\\\n\
3\\frac{t_{3}}{t_{2}^{2}} & 1 & t_{1} & -t_{2} & 0 \\\\\n\
4\\frac{t_{4}}{t_{2}^{3}} & \\frac{t_{3}}{t_{2}^{2}} & 1 & t_{1} & -t_{2} \\\\\n\
0 & \\frac{t_{4}}{t_{2}^{3}} & \\frac{t_{3}}{t_{2}^{2}} & 1 & t_{1}\n\
\\end{bmatrix}";
        assert_eq!(b.to_latex(), expected);
    }

    #[test]
    fn latex_complex_entries() {
        let c = build_c(3, 2).unwrap();
        assert_eq!(
            c.to_latex(),
            "\\begin{bmatrix}\nt_{1} & it_{2} \\\\\n2i & t_{1}\n\\end{bmatrix}"
        );
        assert_eq!(
            poly_latex(&parse_poly("(1-2*i)*t1 - t2^-1").unwrap()),
            "(1-2i)t_{1} - \\frac{1}{t_{2}}"
        );
    }

    #[test]
    fn text_form() {
        assert_eq!(build_c(2, 1).unwrap().to_text(), "[[t1]]");
        assert_eq!(
            build_c(2, 2).unwrap().to_text(),
            "[[t1, i*t2],\n [2*i, t1]]"
        );
        assert_eq!(HessenbergMatrix::<BigInt>::zeros(0).to_text(), "[]");
    }

    #[test]
    fn json_round_trip() {
        let h = build_h(4, 3).unwrap();
        let v = h.to_json();
        assert_eq!(v["n"], 3);
        assert_eq!(v["entries"][0][2], json!({"terms": []}));
        let back: HessenbergMatrix<LaurentPoly> = matrix_from_json(&v).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn json_integer_matrix() {
        let v = json!({"n": 2, "entries": [["1", 2], ["-3", "4"]]});
        let m: HessenbergMatrix<BigInt> = matrix_from_json(&v).unwrap();
        assert_eq!(m.entry(2, 1), BigInt::from(-3));
        assert_eq!(
            m.to_json(),
            json!({"n": 2, "entries": [["1", "2"], ["-3", "4"]]})
        );
        let bad = json!({"n": 3, "entries": [["1", "2"], ["-3", "4"]]});
        assert!(matrix_from_json::<BigInt>(&bad).is_err());
    }
}
