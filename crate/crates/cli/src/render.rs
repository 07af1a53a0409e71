//! JSON value builders for the exact types.
//!
//! Everything numeric is rendered as a string ("-1", "3/2") so values stay
//! exact; serde_json maps preserve insertion order, which the callers keep
//! deterministic.

use serde_json::{json, Value};
use symchar::algebra::{scalar_string, BivarPoly};
use symchar::symfun::ShiftedSymPoly;

/// `[{"e1":…,"e2":…,"coeff":"…"}, …]` in map order.
pub fn bivar_json(poly: &BivarPoly) -> Value {
    let terms: Vec<Value> = poly
        .terms()
        .map(|(&(e1, e2), c)| json!({"e1": e1, "e2": e2, "coeff": scalar_string(c)}))
        .collect();
    Value::Array(terms)
}

/// `[{"card":…,"p":[[k,e],…],"coeff":"…"}, …]` in canonical term order.
pub fn sympoly_json(poly: &ShiftedSymPoly) -> Value {
    let terms: Vec<Value> = poly
        .terms()
        .map(|(m, c)| {
            let gens: Vec<Value> = m
                .p_exps()
                .iter()
                .map(|&(k, e)| Value::Array(vec![k.into(), e.into()]))
                .collect();
            json!({"card": m.card_exp(), "p": gens, "coeff": scalar_string(c)})
        })
        .collect();
    Value::Array(terms)
}

/// Rebuild a polynomial from the term list produced by [`sympoly_json`].
/// `None` when the shape is not as expected.
pub fn sympoly_from_json(value: &Value) -> Option<ShiftedSymPoly> {
    let mut poly = ShiftedSymPoly::zero();
    for term in value.as_array()? {
        let coeff: symchar::Scalar = term["coeff"].as_str()?.parse().ok()?;
        let card = u32::try_from(term["card"].as_u64()?).ok()?;
        let mut monomial = ShiftedSymPoly::card().pow(card);
        for pair in term["p"].as_array()? {
            let k = u32::try_from(pair.get(0)?.as_u64()?).ok()?;
            let e = u32::try_from(pair.get(1)?.as_u64()?).ok()?;
            monomial = monomial.mul(&ShiftedSymPoly::p(k).pow(e));
        }
        poly.add_assign(&monomial.scale(&coeff));
    }
    Some(poly)
}

/// Quote a CSV field (partition strings contain commas).
pub fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

/// Pretty-printed JSON document with a trailing newline.
pub fn json_doc(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
