use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use super::{Bigrading, Generator, SComplex};
use crate::algebra::{ExactMatrix, LaurentPoly, RingSpec};
use crate::error::{Error, Result};

fn int_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => Value::String(x.to_string()),
    }
}

fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.to_string().parse().map_err(|_| bad("integer expected")),
        Value::String(s) => s.parse().map_err(|_| bad("integer expected")),
        _ => Err(bad("integer expected")),
    }
}

fn bad(msg: &str) -> Error {
    Error::Json(msg.to_string())
}

pub(super) fn to_json(c: &SComplex) -> Value {
    let names: Vec<&str> = c.generators.iter().map(|g| g.name.as_str()).collect();
    let gens: Vec<Value> = c
        .generators
        .iter()
        .map(|g| {
            json!({
                "name": g.name,
                "zgrade": g.grading.zgrade,
                "idegree": [int_value(g.grading.idegree.numer()), int_value(g.grading.idegree.denom())],
            })
        })
        .collect();
    let square = |m: &ExactMatrix<LaurentPoly>| -> Value {
        Value::Array(
            m.iter()
                .map(|(r, col, p)| json!({"from": names[col], "to": names[r], "poly": Value::Object(p.to_json_map())}))
                .collect(),
        )
    };
    let d1: Vec<Value> = c
        .delta1
        .iter()
        .map(|(_, col, p)| json!({"gen": names[col], "poly": Value::Object(p.to_json_map())}))
        .collect();
    let d2: Vec<Value> = c
        .delta2
        .iter()
        .map(|(r, _, p)| json!({"gen": names[r], "poly": Value::Object(p.to_json_map())}))
        .collect();
    json!({
        "ring": c.ring.name(),
        "generators": gens,
        "d": square(&c.d),
        "v": square(&c.v),
        "delta1": d1,
        "delta2": d2,
    })
}

fn field<'a>(o: &'a Map<String, Value>, k: &str) -> Result<&'a Value> {
    o.get(k).ok_or_else(|| Error::Json(format!("missing field {k}")))
}

fn poly(v: &Value) -> Result<LaurentPoly> {
    let m = v.as_object().ok_or_else(|| bad("poly must be an object"))?;
    LaurentPoly::from_json_map(m).map_err(Error::Json)
}

pub(super) fn from_json(v: &Value) -> Result<SComplex> {
    let o = v.as_object().ok_or_else(|| bad("complex must be an object"))?;
    let ring: RingSpec = match o.get("ring") {
        Some(Value::String(s)) => s.parse().map_err(|e: String| Error::Json(e))?,
        None => RingSpec::Generic,
        _ => return Err(bad("ring must be a string")),
    };
    let mut generators = Vec::new();
    for g in field(o, "generators")?.as_array().ok_or_else(|| bad("generators must be an array"))? {
        let g = g.as_object().ok_or_else(|| bad("generator must be an object"))?;
        let name = field(g, "name")?.as_str().ok_or_else(|| bad("name must be a string"))?.to_string();
        let zgrade = field(g, "zgrade")?.as_i64().ok_or_else(|| bad("zgrade must be an integer"))?;
        let id = field(g, "idegree")?.as_array().ok_or_else(|| bad("idegree must be [num, den]"))?;
        if id.len() != 2 {
            return Err(bad("idegree must be [num, den]"));
        }
        let (num, den) = (parse_int(&id[0])?, parse_int(&id[1])?);
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        generators.push(Generator {
            name,
            grading: Bigrading::new(zgrade, BigRational::new(num, den)),
        });
    }
    let mut c = SComplex::empty(ring, generators);
    let index = |c: &SComplex, v: &Value| -> Result<usize> {
        let s = v.as_str().ok_or_else(|| bad("generator reference must be a string"))?;
        c.index_of(s).ok_or_else(|| Error::Json(format!("unknown generator {s}")))
    };
    for key in ["d", "v"] {
        let Some(arr) = o.get(key) else { continue };
        for e in arr.as_array().ok_or_else(|| bad("map must be an array"))? {
            let e = e.as_object().ok_or_else(|| bad("entry must be an object"))?;
            let (from, to) = (index(&c, field(e, "from")?)?, index(&c, field(e, "to")?)?);
            let p = poly(field(e, "poly")?)?;
            if key == "d" {
                c.d.add_to(to, from, &p);
            } else {
                c.v.add_to(to, from, &p);
            }
        }
    }
    for key in ["delta1", "delta2"] {
        let Some(arr) = o.get(key) else { continue };
        for e in arr.as_array().ok_or_else(|| bad("map must be an array"))? {
            let e = e.as_object().ok_or_else(|| bad("entry must be an object"))?;
            let g = index(&c, field(e, "gen")?)?;
            let p = poly(field(e, "poly")?)?;
            if key == "delta1" {
                c.delta1.add_to(0, g, &p);
            } else {
                c.delta2.add_to(g, 0, &p);
            }
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scomplex::{atom, tensor};

    #[test]
    fn round_trip() {
        let a = atom(&BigRational::new(1.into(), 3.into())).unwrap();
        let t = tensor(&a, &a.dual()).unwrap();
        for c in [a, t] {
            let j = to_json(&c);
            let back = from_json(&j).unwrap();
            assert_eq!(back, c);
            assert_eq!(to_json(&back), j);
        }
    }
}
