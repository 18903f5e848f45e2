//! JSON form of symbolic elements.
//!
//! An element serializes as a list of terms
//! `{"i": _, "j": _, "k": _, "coeff": [[λ-exponent, numerator, denominator], …]}`,
//! in canonical monomial order. Exact rationals are emitted as integer pairs;
//! coefficients outside the i64 range are a serialization error (they do not
//! occur in any computation this crate performs).

use super::{HopfElement, HopfError, LaurentScalar, Monomial, Rat, TensorElement};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

fn coeff_to_json(c: &LaurentScalar) -> Result<Value, HopfError> {
    let mut triples = Vec::new();
    for (exp, q) in c.iter() {
        let numer = q.numer().to_i64().ok_or_else(|| {
            HopfError::Serial(format!("numerator {} does not fit in i64", q.numer()))
        })?;
        let denom = q.denom().to_i64().ok_or_else(|| {
            HopfError::Serial(format!("denominator {} does not fit in i64", q.denom()))
        })?;
        triples.push(json!([exp, numer, denom]));
    }
    Ok(Value::Array(triples))
}

pub fn hopf_element_to_json(e: &HopfElement) -> Result<Value, HopfError> {
    let mut terms = Vec::new();
    for (m, c) in e.iter() {
        terms.push(json!({
            "i": m.p0,
            "j": m.p1,
            "k": m.e,
            "coeff": coeff_to_json(c)?,
        }));
    }
    Ok(Value::Array(terms))
}

pub fn tensor_element_to_json(t: &TensorElement) -> Result<Value, HopfError> {
    let mut terms = Vec::new();
    for ((l, r), c) in t.iter() {
        terms.push(json!({
            "left":  { "i": l.p0, "j": l.p1, "k": l.e },
            "right": { "i": r.p0, "j": r.p1, "k": r.e },
            "coeff": coeff_to_json(c)?,
        }));
    }
    Ok(Value::Array(terms))
}

pub fn hopf_element_from_json(v: &Value) -> Result<HopfElement, HopfError> {
    let arr = v
        .as_array()
        .ok_or_else(|| HopfError::Serial("expected a term array".into()))?;
    let mut out = HopfElement::zero();
    for term in arr {
        let get_u = |key: &str| -> Result<u32, HopfError> {
            term.get(key)
                .and_then(Value::as_u64)
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| HopfError::Serial(format!("missing or invalid field {:?}", key)))
        };
        let k = term
            .get("k")
            .and_then(Value::as_i64)
            .and_then(|x| i32::try_from(x).ok())
            .ok_or_else(|| HopfError::Serial("missing or invalid field \"k\"".into()))?;
        let mono = Monomial::new(get_u("i")?, get_u("j")?, k);
        let coeff_arr = term
            .get("coeff")
            .and_then(Value::as_array)
            .ok_or_else(|| HopfError::Serial("missing coeff array".into()))?;
        let mut coeff = LaurentScalar::zero();
        for triple in coeff_arr {
            let t = triple
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| HopfError::Serial("coeff entries must be triples".into()))?;
            let exp = t[0]
                .as_i64()
                .ok_or_else(|| HopfError::Serial("invalid λ-exponent".into()))?;
            let numer = t[1]
                .as_i64()
                .ok_or_else(|| HopfError::Serial("invalid numerator".into()))?;
            let denom = t[2]
                .as_i64()
                .filter(|d| *d != 0)
                .ok_or_else(|| HopfError::Serial("invalid denominator".into()))?;
            coeff = &coeff
                + &LaurentScalar::term(Rat::new(BigInt::from(numer), BigInt::from(denom)), exp);
        }
        out.add_scaled_monomial(mono, &coeff);
    }
    Ok(out)
}
