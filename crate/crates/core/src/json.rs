//! Canonical machine-readable forms of the core types. Every top-level
//! object carries `schema_version`.

use serde_json::{json, Value};

use crate::algebra::{basis_index, AlgebraElement, AlgebraSpec};
use crate::burau::LaurentMatrix;
use crate::complexes::{HomPoincare, ProjComplex};
use crate::curves::{BigradedNormalCurve, EndKind, GapKind};
use crate::poly::{BigradedPoly, LaurentPoly};

pub const SCHEMA_VERSION: u32 = 1;

/// Array of `{"path": [...], "coeff": n}` sorted by the canonical basis
/// order.
pub fn algebra_element_json(e: &AlgebraElement, spec: &AlgebraSpec) -> Value {
    let mut terms: Vec<(usize, Value)> = e
        .terms()
        .map(|(p, c)| {
            let idx = basis_index(spec, p).expect("element in basis form");
            (idx, json!({"path": p.0.clone(), "coeff": c}))
        })
        .collect();
    terms.sort_by_key(|(idx, _)| *idx);
    Value::Array(terms.into_iter().map(|(_, v)| v).collect())
}

pub fn complex_json(c: &ProjComplex) -> Value {
    let summands: Vec<Value> = c
        .summands()
        .iter()
        .map(|s| json!({"id": s.id, "vertex": s.vertex, "hdeg": s.hdeg, "ideg": s.ideg}))
        .collect();
    let entries: Vec<Value> = c
        .entries()
        .map(|(a, b, e)| {
            json!({"src": a, "dst": b, "value": algebra_element_json(e, &c.spec)})
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "m": c.spec.m,
        "summands": summands,
        "entries": entries,
    })
}

/// `{"terms": [{"r1":..,"r2":..,"coeff":..}]}` sorted lexicographically.
pub fn bigraded_poly_json(p: &BigradedPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|((r1, r2), c)| json!({"r1": r1, "r2": r2, "coeff": c}))
        .collect();
    json!({"terms": terms})
}

/// `{"terms": [{"e":..,"c":..}]}` sorted by exponent.
pub fn laurent_poly_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p.terms().map(|(e, c)| json!({"e": e, "c": c})).collect();
    json!({"terms": terms})
}

/// Row-major array of polynomials.
pub fn laurent_matrix_json(m: &LaurentMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows)
        .map(|r| Value::Array((0..m.cols).map(|c| laurent_poly_json(m.get(r, c))).collect()))
        .collect();
    json!({"schema_version": SCHEMA_VERSION, "rows": m.rows, "cols": m.cols, "entries": rows})
}

pub fn hom_poincare_json(h: &HomPoincare) -> Value {
    let torsion: Vec<Value> = h
        .torsion
        .iter()
        .map(|t| json!({"r1": t.r1, "r2": t.r2, "factor": t.factor.to_string()}))
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "poincare": bigraded_poly_json(&h.poly),
        "total_rank": h.total_rank(),
        "torsion": torsion,
    })
}

fn gap_code(g: GapKind) -> &'static str {
    match g {
        GapKind::Above => "above",
        GapKind::Below => "below",
        GapKind::WrapLeft => "wrap-left",
        GapKind::WrapRight => "wrap-right",
    }
}

fn end_code(e: EndKind) -> &'static str {
    match e {
        EndKind::PunctureLeft => "puncture-left",
        EndKind::PunctureRight => "puncture-right",
        EndKind::Boundary => "boundary",
    }
}

pub fn curve_json(c: &BigradedNormalCurve) -> Value {
    let crossings: Vec<Value> = c
        .crossings()
        .iter()
        .map(|cr| json!({"line": cr.line, "x1": cr.x1, "x2": cr.x2}))
        .collect();
    let mut segments = Vec::with_capacity(c.crossings().len() + 1);
    segments.push(json!(end_code(c.ends().0)));
    for g in c.gaps() {
        segments.push(json!(gap_code(*g)));
    }
    segments.push(json!(end_code(c.ends().1)));
    let (p0, p1) = c.end_points();
    let endpoint = |p: i64| {
        if p < 0 {
            json!("boundary")
        } else {
            json!(p)
        }
    };
    json!({
        "schema_version": SCHEMA_VERSION,
        "m": c.m,
        "crossings": crossings,
        "segments": segments,
        "ends": [endpoint(p0), endpoint(p1)],
    })
}
