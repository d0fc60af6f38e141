//! JSON wire formats shared by the command-line front end and any external
//! tooling.
//!
//! All rationals travel as normalized strings (`"24/7"`, `"-3"`, `"0"`).
//! Binary forms are encoded by order and Cayley coefficient list:
//!
//! ```json
//! {"order": 4, "cayley": ["16", "0", "1/3", "0", "16"]}
//! ```
//!
//! Symbolic forms use the same envelope but carry polynomials as the
//! coefficients. A polynomial is encoded with an explicit variable universe
//! and sparse term list:
//!
//! ```json
//! {"variables": ["q0", "q1", "q2"],
//!  "terms": [{"exponents": [3, 0, 0], "coeff": "1"},
//!            {"exponents": [1, 2, 0], "coeff": "4/5"}]}
//! ```
//!
//! Emission is deterministic: object keys are sorted, rationals are
//! normalized, and polynomial terms appear in the canonical (ascending
//! exponent-vector) order. Parsers reject rather than repair malformed
//! payloads so that every CLI error is a deliberate validation failure.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::form::BinaryForm;
use crate::poly::{MultiPoly, Universe};
use crate::ring::{format_rational, parse_rational, Rational};

/// A rational as its normalized string form.
pub fn rational_json(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

/// Parse a rational from a JSON string (`"p/q"` or `"n"`). Plain JSON
/// integers are accepted as a convenience.
pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(crate::ring::rat_int(i))
            } else {
                Err(Error::Parse(format!(
                    "rational numbers must be exact; got `{n}`"
                )))
            }
        }
        other => Err(Error::Parse(format!(
            "expected a rational string, got `{other}`"
        ))),
    }
}

/// Encode a list of rationals (e.g. an involutor's z-vector).
pub fn rational_list_json(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(rational_json).collect())
}

/// Parse a JSON array of rationals.
pub fn rational_list_from_json(v: &Value) -> Result<Vec<Rational>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("expected an array of rationals, got `{v}`")))?
        .iter()
        .map(rational_from_json)
        .collect()
}

/// Encode a polynomial with its variable universe and sparse terms.
pub fn multipoly_json(p: &MultiPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(exps, c)| {
            json!({
                "exponents": exps,
                "coeff": format_rational(c),
            })
        })
        .collect();
    json!({
        "variables": p.vars().as_slice(),
        "terms": terms,
    })
}

fn universe_from_json(v: &Value) -> Result<Universe> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("`variables` must be an array of names".to_string()))?;
    let mut names = Vec::with_capacity(arr.len());
    for item in arr {
        let name = item
            .as_str()
            .ok_or_else(|| Error::Parse(format!("variable name must be a string, got `{item}`")))?;
        if name.is_empty() {
            return Err(Error::Parse("empty variable name".to_string()));
        }
        if names.iter().any(|n| n == name) {
            return Err(Error::Parse(format!("duplicate variable name `{name}`")));
        }
        names.push(name.to_string());
    }
    Ok(std::sync::Arc::new(names))
}

/// Parse a polynomial from its JSON encoding (repeated exponent vectors are
/// summed).
pub fn multipoly_from_json(v: &Value) -> Result<MultiPoly> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse(format!("expected a polynomial object, got `{v}`")))?;
    let vars = universe_from_json(
        obj.get("variables")
            .ok_or_else(|| Error::Parse("polynomial is missing `variables`".to_string()))?,
    )?;
    let terms_json = obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("polynomial is missing a `terms` array".to_string()))?;
    let mut acc = MultiPoly::zero_in(&vars);
    for term in terms_json {
        let tobj = term
            .as_object()
            .ok_or_else(|| Error::Parse(format!("expected a term object, got `{term}`")))?;
        let exps_json = tobj
            .get("exponents")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("term is missing an `exponents` array".to_string()))?;
        let mut exps = Vec::with_capacity(exps_json.len());
        for e in exps_json {
            let n = e
                .as_u64()
                .ok_or_else(|| Error::Parse(format!("exponent must be a nonnegative integer, got `{e}`")))?;
            exps.push(u32::try_from(n).map_err(|_| {
                Error::Parse(format!("exponent {n} is out of range"))
            })?);
        }
        let coeff = rational_from_json(
            tobj.get("coeff")
                .ok_or_else(|| Error::Parse("term is missing `coeff`".to_string()))?,
        )?;
        let mono = MultiPoly::monomial(&vars, &exps, coeff)
            .map_err(|e| Error::Parse(e.to_string()))?;
        acc = crate::ring::Coeff::add_ref(&acc, &mono);
    }
    Ok(acc)
}

/// Encode a rational form by order and Cayley coefficients.
pub fn form_json(f: &BinaryForm<Rational>) -> Value {
    json!({
        "order": f.order(),
        "cayley": f.cayley().iter().map(format_rational).collect::<Vec<_>>(),
    })
}

/// Encode a symbolic form; coefficients become polynomial objects.
pub fn symbolic_form_json(f: &BinaryForm<MultiPoly>) -> Value {
    json!({
        "order": f.order(),
        "cayley": f.cayley().iter().map(multipoly_json).collect::<Vec<_>>(),
    })
}

fn form_envelope(v: &Value) -> Result<(usize, &Vec<Value>)> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse(format!("expected a form object, got `{v}`")))?;
    let order = obj
        .get("order")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("form is missing a nonnegative integer `order`".to_string()))?;
    let cayley = obj
        .get("cayley")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("form is missing a `cayley` array".to_string()))?;
    Ok((order as usize, cayley))
}

/// Parse a rational form from its JSON encoding.
pub fn form_from_json(v: &Value) -> Result<BinaryForm<Rational>> {
    let (order, cayley) = form_envelope(v)?;
    let coeffs: Vec<Rational> = cayley
        .iter()
        .map(rational_from_json)
        .collect::<Result<_>>()?;
    BinaryForm::from_cayley(order, &coeffs)
}

/// Parse a symbolic form. Entries may be polynomial objects or plain
/// rational strings (promoted to constants); all coefficients are rebuilt in
/// the union of the universes that occur, so mixed encodings are fine.
pub fn symbolic_form_from_json(v: &Value) -> Result<BinaryForm<MultiPoly>> {
    let (order, cayley) = form_envelope(v)?;
    let mut coeffs: Vec<MultiPoly> = Vec::with_capacity(cayley.len());
    for entry in cayley {
        if entry.is_object() {
            coeffs.push(multipoly_from_json(entry)?);
        } else {
            let c = rational_from_json(entry)?;
            coeffs.push(MultiPoly::constant(&std::sync::Arc::new(Vec::new()), c));
        }
    }
    let mut names: Vec<String> = Vec::new();
    for c in &coeffs {
        for name in c.vars().iter() {
            if !names.contains(name) {
                names.push(name.clone());
            }
        }
    }
    let union: Universe = std::sync::Arc::new(names);
    let coeffs: Vec<MultiPoly> = coeffs
        .iter()
        .map(|c| c.embed_into(&union))
        .collect::<Result<_>>()?;
    BinaryForm::from_cayley(order, &coeffs)
}

/// True when every Cayley entry is a plain rational (string or integer), so
/// the form can take the fast rational path.
pub fn form_is_rational(v: &Value) -> bool {
    match form_envelope(v) {
        Ok((_, cayley)) => cayley.iter().all(|e| !e.is_object()),
        Err(_) => true,
    }
}

/// A JSON object from (key, value) pairs; keys are emitted sorted.
pub fn sorted_object(pairs: Vec<(String, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in pairs {
        map.insert(k, v);
    }
    Value::Object(map)
}
