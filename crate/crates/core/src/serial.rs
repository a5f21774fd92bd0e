//! Canonical JSON forms. Rationals are decimal strings, q-Laurent coefficients are
//! `[[q-exponent, rational], …]`, polynomial terms are `[exponent-vector, coefficient]`
//! in lexicographic order.

use crate::algebra::Kind;
use crate::arith::{parse_rat, MultiPoly, QLaurent, Rat};
use crate::error::{Error, Result};
use crate::patterns::{Pairing, Pattern};
use serde_json::{json, Value};

fn perr<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}

pub fn rat_to_json(r: &Rat) -> Value {
    Value::String(r.to_string())
}

pub fn rat_from_json(v: &Value) -> Result<Rat> {
    match v.as_str().and_then(parse_rat) {
        Some(r) => Ok(r),
        None => perr(format!("expected a rational string, got {v}")),
    }
}

pub fn qlaurent_to_json(c: &QLaurent) -> Value {
    Value::Array(c.terms().map(|(k, r)| json!([k, r.to_string()])).collect())
}

pub fn qlaurent_from_json(v: &Value) -> Result<QLaurent> {
    let Some(arr) = v.as_array() else {
        return perr("q-Laurent coefficient must be an array");
    };
    let mut terms = Vec::with_capacity(arr.len());
    let mut last = None;
    for t in arr {
        let (k, r) = match t.as_array().map(Vec::as_slice) {
            Some([k, r]) => (k, r),
            _ => return perr(format!("bad q-term {t}")),
        };
        let k = exponent(k)?;
        if last.is_some_and(|l| l >= k) {
            return perr("q-exponents must be strictly increasing");
        }
        last = Some(k);
        let r = rat_from_json(r)?;
        if r == Rat::from_integer(0.into()) {
            return perr("zero q-coefficient");
        }
        terms.push((k, r));
    }
    Ok(QLaurent::from_terms(terms))
}

/// Bound on any exponent in a file. q-Laurent coefficients are dense, so an unbounded
/// q-exponent would be an allocation request.
pub const MAX_EXPONENT: i64 = 1 << 12;

fn int32(v: &Value) -> Result<i32> {
    match v.as_i64().and_then(|x| i32::try_from(x).ok()) {
        Some(x) => Ok(x),
        None => perr(format!("expected a 32-bit integer, got {v}")),
    }
}

fn exponent(v: &Value) -> Result<i32> {
    let x = int32(v)?;
    if i64::from(x).abs() > MAX_EXPONENT {
        return perr(format!("exponent {x} out of range"));
    }
    Ok(x)
}

/// Coefficient types with a canonical JSON form.
pub trait JsonCoeff: crate::arith::Ring {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl JsonCoeff for QLaurent {
    fn to_json(&self) -> Value {
        qlaurent_to_json(self)
    }
    fn from_json(v: &Value) -> Result<Self> {
        qlaurent_from_json(v)
    }
}

impl JsonCoeff for Rat {
    fn to_json(&self) -> Value {
        rat_to_json(self)
    }
    fn from_json(v: &Value) -> Result<Self> {
        rat_from_json(v)
    }
}

pub fn poly_to_json<S: JsonCoeff>(p: &MultiPoly<S>) -> Value {
    let terms: Vec<Value> = p.terms().map(|(e, c)| json!([e, c.to_json()])).collect();
    json!({ "nvars": p.nvars(), "terms": terms })
}

/// Strict parse: lex-ordered distinct exponents, nonzero coefficients.
pub fn poly_from_json<S: JsonCoeff>(v: &Value) -> Result<MultiPoly<S>> {
    let Some(n) = v.get("nvars").and_then(Value::as_u64) else {
        return perr("missing nvars");
    };
    if n > 64 {
        return perr("too many variables");
    }
    let n = n as usize;
    let Some(arr) = v.get("terms").and_then(Value::as_array) else {
        return perr("missing terms");
    };
    let mut terms = Vec::with_capacity(arr.len());
    let mut prev: Option<Vec<i32>> = None;
    for t in arr {
        let (e, c) = match t.as_array().map(Vec::as_slice) {
            Some([e, c]) => (e, c),
            _ => return perr(format!("bad term {t}")),
        };
        let Some(ea) = e.as_array() else {
            return perr("exponent vector must be an array");
        };
        let e: Vec<i32> = ea.iter().map(exponent).collect::<Result<_>>()?;
        if e.len() != n {
            return perr("exponent vector length differs from nvars");
        }
        if prev.as_ref().is_some_and(|p| *p >= e) {
            return perr("terms must be in strictly increasing lex order");
        }
        let c = S::from_json(c)?;
        if c.is_zero() {
            return perr("zero coefficient");
        }
        prev = Some(e.clone());
        terms.push((e, c));
    }
    MultiPoly::from_terms(n, terms)
}

pub fn pattern_to_json(p: &Pattern) -> Value {
    json!(p.partners())
}

pub fn pattern_from_json(v: &Value) -> Result<Pattern> {
    match v {
        Value::String(s) => Pattern::parse(s),
        Value::Array(a) => {
            let p: Vec<i32> = a.iter().map(int32).collect::<Result<_>>()?;
            Pattern::from_partners(p)
        }
        _ => perr("pattern must be text or a partner array"),
    }
}

/// Point at which the entries are given.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QPoint {
    Generic,
    /// q = e^{2πi/3}, where the entries become homogeneous with rational coefficients.
    Rs,
}

impl QPoint {
    pub fn name(self) -> &'static str {
        match self {
            QPoint::Generic => "generic",
            QPoint::Rs => "rs",
        }
    }
}

/// Contents of a solution file.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionFile {
    pub kind: Kind,
    pub rank: usize,
    pub pairing: Pairing,
    pub patterns: Vec<Pattern>,
    pub entries: Vec<MultiPoly<QLaurent>>,
}

pub fn pairing_name(p: Pairing) -> &'static str {
    match p {
        Pairing::Left => "left",
        Pairing::Right => "right",
    }
}

pub fn solution_to_json(s: &SolutionFile) -> Value {
    let mut head = json!({
        "type": s.kind.to_string(),
        "rank": s.rank,
        "q": QPoint::Generic.name(),
    });
    if s.kind == Kind::D {
        head["d_pairing"] = json!(pairing_name(s.pairing));
    }
    json!({
        "header": head,
        "patterns": s.patterns.iter().map(|p| Value::String(p.text())).collect::<Vec<_>>(),
        "entries": s.entries.iter().map(poly_to_json).collect::<Vec<_>>(),
    })
}

pub fn solution_from_json(v: &Value) -> Result<SolutionFile> {
    let Some(h) = v.get("header") else {
        return perr("missing header");
    };
    let kind: Kind = match h.get("type").and_then(Value::as_str) {
        Some(t) => t.parse().map_err(|_| Error::Parse(format!("bad type {t}")))?,
        None => return perr("missing type"),
    };
    let Some(rank) = h.get("rank").and_then(Value::as_u64) else {
        return perr("missing rank");
    };
    if rank > 64 {
        return perr("rank out of range");
    }
    if h.get("q").and_then(Value::as_str) != Some("generic") {
        return perr("solution files hold generic-q entries");
    }
    let pairing = match h.get("d_pairing").and_then(Value::as_str) {
        None | Some("right") => Pairing::Right,
        Some("left") => Pairing::Left,
        Some(x) => return perr(format!("bad pairing {x}")),
    };
    let (Some(ps), Some(es)) = (v.get("patterns").and_then(Value::as_array), v.get("entries").and_then(Value::as_array))
    else {
        return perr("missing patterns or entries");
    };
    if ps.len() != es.len() {
        return perr("pattern and entry counts differ");
    }
    let patterns: Vec<Pattern> = ps.iter().map(pattern_from_json).collect::<Result<_>>()?;
    if patterns.iter().any(|p| p.len() != rank as usize) {
        return perr("pattern length differs from rank");
    }
    let entries: Vec<MultiPoly<QLaurent>> = es.iter().map(poly_from_json).collect::<Result<_>>()?;
    if entries.iter().any(|e| e.nvars() != rank as usize) {
        return perr("entry nvars differs from rank");
    }
    Ok(SolutionFile { kind, rank: rank as usize, pairing, patterns, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    #[test]
    fn qlaurent_roundtrip() {
        let c = QLaurent::from_terms([(-2, ratio(1, 3)), (5, rat(-7))]);
        let v = qlaurent_to_json(&c);
        assert_eq!(v, json!([[-2, "1/3"], [5, "-7"]]));
        assert_eq!(qlaurent_from_json(&v).unwrap(), c);
    }

    #[test]
    fn poly_rejects_unsorted_terms() {
        let v = json!({"nvars": 1, "terms": [[[2], "1"], [[1], "1"]]});
        assert!(poly_from_json::<Rat>(&v).is_err());
        let v = json!({"nvars": 1, "terms": [[[1], "1"], [[2], "1/2"]]});
        assert_eq!(poly_from_json::<Rat>(&v).unwrap().len(), 2);
    }

    #[test]
    fn huge_exponents_rejected() {
        assert!(qlaurent_from_json(&json!([[2_000_000_000, "1"]])).is_err());
        let v = json!({"nvars": 1, "terms": [[[-5000], "1"]]});
        assert!(poly_from_json::<Rat>(&v).is_err());
    }

    #[test]
    fn pattern_both_forms() {
        let a = pattern_from_json(&json!("(.)")).ok();
        assert!(a.is_none());
        let b = pattern_from_json(&json!([-1, 2, 1])).unwrap();
        assert_eq!(b.text(), ".()");
        assert_eq!(pattern_to_json(&b), json!([-1, 2, 1]));
    }
}
