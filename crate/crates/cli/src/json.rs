//! JSON encodings of the engine's values. Integers that do not fit in an
//! `i64` are written as decimal strings; floats must be finite.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use qheis::algebra::{AmbiguityKind, ConfluenceSummary, Element, WordPoly};
use qheis::coeff::RatFun;
use qheis::lie::{Decomposition, IdentityReport, KetImage, LaurentPoly};
use serde_json::{json, Map, Value};

use crate::error::DomainError;

pub const FORMAT_VERSION: u32 = 1;

/// The JSON schema every output document validates against.
pub const OUTPUT_SCHEMA: &str = include_str!("../schema/output.schema.json");

pub fn int(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn float(x: f64) -> Result<Value, DomainError> {
    if x.is_finite() {
        Ok(json!(x))
    } else {
        Err(DomainError::NonFinite)
    }
}

pub fn floats(xs: &[f64]) -> Result<Value, DomainError> {
    xs.iter()
        .map(|&x| float(x))
        .collect::<Result<Vec<_>, _>>()
        .map(Value::Array)
}

/// `{"num": [...], "den": [...]}` with ascending integer coefficients.
pub fn coeff(c: &RatFun) -> Value {
    let (num, den) = c.integer_parts();
    json!({
        "num": num.iter().map(int).collect::<Vec<_>>(),
        "den": den.iter().map(int).collect::<Vec<_>>(),
    })
}

pub fn element(x: &Element) -> Value {
    let terms: Vec<Value> = x
        .graded_terms()
        .into_iter()
        .map(|(w, c)| json!({"b": w.b(), "k": w.k(), "a": w.a(), "coeff": coeff(c)}))
        .collect();
    json!({ "terms": terms })
}

/// Like [`element`] when every word is a basis word; otherwise the
/// offending terms carry a `"word"` field instead of exponents.
pub fn word_poly(p: &WordPoly) -> Value {
    if let Ok(x) = p.to_element() {
        return element(&x);
    }
    let terms: Vec<Value> = p
        .terms()
        .map(|(w, c)| match w.as_basis() {
            Some(bw) => json!({"b": bw.b(), "k": bw.k(), "a": bw.a(), "coeff": coeff(c)}),
            None => json!({"word": w.to_string(), "coeff": coeff(c)}),
        })
        .collect();
    json!({ "terms": terms })
}

pub fn decomposition(d: &Decomposition) -> Value {
    json!({
        "linear_ab": {"a": coeff(&d.linear_ab.0), "b": coeff(&d.linear_ab.1)},
        "derived": element(&d.derived),
        "e_part": element(&d.e_part),
    })
}

pub fn laurent(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p.terms().map(|(e, c)| json!({"exp": e, "coeff": coeff(c)})).collect();
    json!({ "terms": terms })
}

pub fn identity_report(r: &IdentityReport) -> Value {
    let mut params = Map::new();
    if let Some(k) = r.k {
        params.insert("k".into(), json!(k));
    }
    if let Some(l) = r.l {
        params.insert("l".into(), json!(l));
    }
    json!({
        "identity": r.identity.name(),
        "params": params,
        "verdict": r.verdict,
        "difference": element(&r.difference),
    })
}

pub fn confluence(s: &ConfluenceSummary) -> Value {
    let ambiguities: Vec<Value> = s
        .reports
        .iter()
        .map(|r| {
            json!({
                "word": r.word.to_string(),
                "kind": match r.kind {
                    AmbiguityKind::Overlap => "overlap",
                    AmbiguityKind::Inclusion => "inclusion",
                },
                "rules": [r.rules.0.name(), r.rules.1.name()],
                "resolvable": r.resolvable,
                "outcomes": r.outcomes.iter().map(word_poly).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "rules": s.rules.to_string(),
        "max_len": s.max_len,
        "confluent": s.is_confluent(),
        "unresolvable": s.unresolvable().map(|r| r.word.to_string()).collect::<Vec<_>>(),
        "ambiguities": ambiguities,
    })
}

pub fn ket(k: &KetImage) -> Value {
    let entries: Vec<Value> = k
        .entries()
        .map(|(target, scalars)| {
            let terms: Vec<Value> = scalars
                .iter()
                .map(|s| json!({"coeff": coeff(&s.coeff), "radicand": s.radicand.indices()}))
                .collect();
            json!({"target": target, "terms": terms})
        })
        .collect();
    Value::Array(entries)
}
