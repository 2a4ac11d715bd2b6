//! Polynomial JSON encoding:
//! `{"terms":[{"re":"3","im":"0","exp":{"1":1,"2":1}}, ...]}`.
//!
//! Terms are listed in canonical order (greatest monomial first), integers
//! are decimal strings, and exponent maps are keyed by variable index in
//! increasing numeric order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{GaussianInt, LaurentPoly, Monomial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub re: String,
    pub im: String,
    #[serde(serialize_with = "ser_exps", deserialize_with = "de_exps")]
    pub exp: Vec<(u32, i64)>,
}

fn ser_exps<S: Serializer>(exps: &[(u32, i64)], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(exps.len()))?;
    for (v, e) in exps {
        map.serialize_entry(&v.to_string(), e)?;
    }
    map.end()
}

fn de_exps<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<(u32, i64)>, D::Error> {
    let raw: BTreeMap<String, i64> = BTreeMap::deserialize(d)?;
    let mut out = Vec::with_capacity(raw.len());
    for (k, e) in raw {
        let v: u32 = k
            .parse()
            .map_err(|_| serde::de::Error::custom(format!("bad variable index {k:?}")))?;
        if v == 0 {
            return Err(serde::de::Error::custom("variable indices start at 1"));
        }
        out.push((v, e));
    }
    out.sort_unstable();
    Ok(out)
}

pub fn poly_to_json(p: &LaurentPoly) -> PolyJson {
    PolyJson {
        terms: p
            .terms()
            .map(|(m, c)| TermJson {
                re: c.re().to_string(),
                im: c.im().to_string(),
                exp: m.iter().collect(),
            })
            .collect(),
    }
}

pub fn poly_from_json(j: &PolyJson) -> Result<LaurentPoly> {
    let parse = |s: &str| -> Result<BigInt> {
        s.parse::<BigInt>()
            .map_err(|_| Error::Json(format!("not a decimal integer: {s:?}")))
    };
    let mut terms = Vec::with_capacity(j.terms.len());
    for t in &j.terms {
        let c = GaussianInt::new(parse(&t.re)?, parse(&t.im)?);
        terms.push((c, Monomial::from_pairs(t.exp.iter().copied())));
    }
    Ok(LaurentPoly::from_terms(terms))
}

impl LaurentPoly {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&poly_to_json(self)).expect("polynomial json is always serializable")
    }

    pub fn from_json_str(s: &str) -> Result<LaurentPoly> {
        let j: PolyJson = serde_json::from_str(s)?;
        poly_from_json(&j)
    }
}
