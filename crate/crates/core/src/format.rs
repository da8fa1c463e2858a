//! JSON encoding of polynomials and expansions.
//!
//! A Laurent polynomial is an object from t-exponents (as strings) to
//! integer coefficients; coefficients outside the `i64` range are written
//! as decimal strings.
//!
//! ```text
//! {"basis": "Qp", "coeffs": [{"partition": [2,1], "poly": {"0": 1, "1": 2}}]}
//! ```

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::algebra::{LaurentPoly, VarSet, XPoly};
use crate::basis::{Basis, BasisExpansion};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::report::Comparison;

fn bigint_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(c.to_string()),
    }
}

fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("coefficient {n} is not an integer"))),
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}"))),
        other => Err(Error::Parse(format!("bad coefficient {other}"))),
    }
}

pub fn laurent_to_json(p: &LaurentPoly) -> Value {
    let mut m = Map::new();
    for (e, c) in p.terms() {
        m.insert(e.to_string(), bigint_to_json(c));
    }
    Value::Object(m)
}

pub fn laurent_from_json(v: &Value) -> Result<LaurentPoly> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("polynomial must be an object".into()))?;
    let mut terms = Vec::with_capacity(obj.len());
    for (k, c) in obj {
        let e: i32 = k.parse().map_err(|_| Error::Parse(format!("bad exponent {k:?}")))?;
        terms.push((e, bigint_from_json(c)?));
    }
    Ok(LaurentPoly::from_terms(terms))
}

fn ints_from_json<T: TryFrom<i64>>(v: &Value, what: &str) -> Result<Vec<T>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("{what} must be an array")))?;
    arr.iter()
        .map(|x| {
            x.as_i64()
                .and_then(|i| T::try_from(i).ok())
                .ok_or_else(|| Error::Parse(format!("bad entry {x} in {what}")))
        })
        .collect()
}

pub fn expansion_to_json(e: &BasisExpansion) -> Value {
    let coeffs: Vec<Value> = e
        .terms()
        .map(|(p, c)| json!({"partition": p.parts(), "poly": laurent_to_json(c)}))
        .collect();
    json!({"basis": e.basis().label(), "coeffs": coeffs})
}

pub fn expansion_from_json(v: &Value) -> Result<BasisExpansion> {
    let basis: Basis = v
        .get("basis")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("missing basis".into()))?
        .parse()?;
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing coeffs".into()))?;
    let mut out = BasisExpansion::zero(basis);
    for entry in coeffs {
        let parts: Vec<usize> = ints_from_json(entry.get("partition").unwrap_or(&Value::Null), "partition")?;
        let poly = laurent_from_json(entry.get("poly").unwrap_or(&Value::Null))?;
        out.add_term(Partition::new(parts)?, poly);
    }
    Ok(out)
}

pub fn xpoly_to_json(p: &XPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({"exponent": e, "poly": laurent_to_json(c)}))
        .collect();
    json!({"vars": p.vars().names(), "terms": terms})
}

pub fn xpoly_from_json(v: &Value) -> Result<XPoly> {
    let names: Vec<String> = v
        .get("vars")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing vars".into()))?
        .iter()
        .map(|n| n.as_str().map(str::to_owned).ok_or_else(|| Error::Parse("variable names must be strings".into())))
        .collect::<Result<_>>()?;
    let vars = VarSet::new(names);
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing terms".into()))?;
    let mut out = XPoly::zero(&vars);
    for entry in terms {
        let exp: Vec<i32> = ints_from_json(entry.get("exponent").unwrap_or(&Value::Null), "exponent")?;
        if exp.len() != vars.len() {
            return Err(Error::LengthMismatch { left: exp.len(), right: vars.len() });
        }
        out.add_term(exp, laurent_from_json(entry.get("poly").unwrap_or(&Value::Null))?);
    }
    Ok(out)
}

/// Both sides, their difference and the verdict.
pub fn comparison_to_json(c: &Comparison) -> Value {
    json!({
        "label": c.label,
        "holds": c.holds(),
        "lhs": xpoly_to_json(&c.lhs),
        "rhs": xpoly_to_json(&c.rhs),
        "difference": xpoly_to_json(&c.difference()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lp;
    use crate::partition::part;

    #[test]
    fn documented_shape() {
        let e = BasisExpansion::single(Basis::Qp, part(&[2, 1])).scale(&lp(&[(0, 1), (1, 2)]));
        assert_eq!(
            expansion_to_json(&e).to_string(),
            r#"{"basis":"Qp","coeffs":[{"partition":[2,1],"poly":{"0":1,"1":2}}]}"#
        );
    }

    #[test]
    fn round_trips() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = LaurentPoly::from_terms([(-3, big.clone()), (2, BigInt::from(-5))]);
        let v = laurent_to_json(&p);
        assert_eq!(v["-3"], Value::from(big.to_string()));
        assert_eq!(laurent_from_json(&v).unwrap(), p);

        let e = BasisExpansion::from_terms(Basis::S, [(part(&[3]), p.clone()), (Partition::empty(), lp(&[(0, 1)]))]);
        assert_eq!(expansion_from_json(&expansion_to_json(&e)).unwrap(), e);

        let vars = VarSet::x(2);
        let x = XPoly::from_terms(&vars, [(vec![1, -1], p), (vec![0, 0], lp(&[(1, 1)]))]);
        assert_eq!(xpoly_from_json(&xpoly_to_json(&x)).unwrap(), x);
    }

    #[test]
    fn rejects_malformed() {
        assert!(expansion_from_json(&json!({"basis": "Z", "coeffs": []})).is_err());
        assert!(expansion_from_json(&json!({"basis": "S", "coeffs": [{"partition": [1, 2], "poly": {}}]})).is_err());
        assert!(laurent_from_json(&json!({"x": 1})).is_err());
        assert!(laurent_from_json(&json!({"0": 1.5})).is_err());
    }
}
