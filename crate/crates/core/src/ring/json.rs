//! Canonical JSON encoding of polynomials.
//!
//! A polynomial is an array of `{"coeff": "num/den", "mono": ...}` objects in
//! ascending monomial order. Exponent monomials encode as an object keyed by
//! variable name; y-monomials as an array of `[a, b, c]` triples.

use serde_json::{json, Map, Value};

use super::monomial::{Alphabet, Exponents, Monomial};
use super::poly::Poly;
use super::ysym::{YMonomial, YSymbol};
use crate::error::{Error, Result};
use crate::scalar::{parse_rational, rational_to_string, Rational};

pub trait MonomialJson: Monomial {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

fn exponent(v: &Value) -> Result<u16> {
    v.as_u64()
        .and_then(|e| u16::try_from(e).ok())
        .ok_or_else(|| bad(format!("bad exponent {v}")))
}

impl<A: Alphabet> MonomialJson for Exponents<A> {
    fn to_json(&self) -> Value {
        let mut obj = Map::new();
        for (name, e) in A::NAMES.iter().zip(self.exponents()) {
            obj.insert(name.to_string(), json!(e));
        }
        Value::Object(obj)
    }

    fn from_json(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| bad("monomial must be an object"))?;
        let mut exps = vec![0u16; A::len()];
        for (name, e) in obj {
            let i = A::index_of(name).ok_or_else(|| bad(format!("unknown variable {name}")))?;
            exps[i] = exponent(e)?;
        }
        Ok(Exponents::new(&exps))
    }
}

impl MonomialJson for YMonomial {
    fn to_json(&self) -> Value {
        Value::Array(
            self.symbols()
                .iter()
                .map(|s| json!([s.a, s.b, s.c]))
                .collect(),
        )
    }

    fn from_json(v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| bad("y-monomial must be an array"))?;
        let mut symbols = Vec::with_capacity(arr.len());
        for triple in arr {
            match triple.as_array().map(Vec::as_slice) {
                Some([a, b, c]) => {
                    let s = YSymbol::new(exponent(a)?, exponent(b)?, exponent(c)?);
                    if s.grade() < 0 {
                        return Err(bad(format!("negative-grade symbol {s:?}")));
                    }
                    symbols.push(s);
                }
                _ => return Err(bad("y-symbol must be a triple")),
            }
        }
        Ok(YMonomial::new(symbols))
    }
}

impl<M: MonomialJson> Poly<M, Rational> {
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(m, c)| json!({"coeff": rational_to_string(c), "mono": m.to_json()}))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| bad("polynomial must be an array"))?;
        let mut terms = Vec::with_capacity(arr.len());
        for t in arr {
            let coeff = t
                .get("coeff")
                .and_then(Value::as_str)
                .and_then(parse_rational)
                .ok_or_else(|| bad(format!("bad coefficient in {t}")))?;
            let mono = M::from_json(t.get("mono").ok_or_else(|| bad("missing mono"))?)?;
            terms.push((mono, coeff));
        }
        Ok(Poly::from_terms(terms))
    }
}
