use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::{PolyhedralComplex, Polyhedron};
use crate::coeffs::Rational;
use crate::error::{Error, Result};
use crate::text::parse_rational;

fn int_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(i) => json!(i),
        None => json!(x.to_string()),
    }
}

fn rat_value(q: &Rational) -> Value {
    if q.is_integer() {
        int_value(q.numer())
    } else {
        json!(format!("{}/{}", q.numer(), q.denom()))
    }
}

fn int_rows(rows: &[Vec<BigInt>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| Value::Array(r.iter().map(int_value).collect()))
            .collect(),
    )
}

pub fn polyhedron_to_json(p: &Polyhedron) -> Value {
    json!({
        "dim": p.dim(),
        "equations": int_rows(p.equations()),
        "inequalities": int_rows(p.inequalities()),
        "vertices": Value::Array(p.vertices().iter().map(|v| Value::Array(v.iter().map(rat_value).collect())).collect()),
        "rays": int_rows(p.rays()),
        "lineality": int_rows(p.lineality()),
    })
}

/// `{ambient_dim, cells, f_vector}` with cells in canonical order.
pub fn complex_to_json(c: &PolyhedralComplex) -> Value {
    json!({
        "ambient_dim": c.ambient_dim(),
        "cells": Value::Array(c.cells().iter().map(polyhedron_to_json).collect()),
        "f_vector": c.f_vector(),
    })
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidComplex(msg.into())
}

fn read_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(i.into()))
            .ok_or_else(|| invalid(format!("non-integer number {n}"))),
        Value::String(s) => parse_rational(s).ok_or_else(|| invalid(format!("bad rational {s:?}"))),
        _ => Err(invalid("expected a number")),
    }
}

fn read_rows(v: &Value, key: &str, width: usize) -> Result<Vec<Vec<Rational>>> {
    let arr = v
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| invalid(format!("missing array {key:?}")))?;
    arr.iter()
        .map(|row| {
            let row = row
                .as_array()
                .ok_or_else(|| invalid(format!("{key}: row is not an array")))?;
            if row.len() != width {
                return Err(invalid(format!(
                    "{key}: row of length {} (expected {width})",
                    row.len()
                )));
            }
            row.iter().map(read_rational).collect()
        })
        .collect()
}

fn read_cell(v: &Value, n: usize) -> Result<Polyhedron> {
    let split = |rows: Vec<Vec<Rational>>| -> Vec<(Vec<Rational>, Rational)> {
        rows.into_iter()
            .map(|mut r| {
                let b = r.pop().unwrap();
                (r, b)
            })
            .collect()
    };
    let eqs = split(read_rows(v, "equations", n + 1)?);
    let ineqs = split(read_rows(v, "inequalities", n + 1)?);
    let verts = read_rows(v, "vertices", n)?;
    let rays = read_rows(v, "rays", n)?;
    let lin = read_rows(v, "lineality", n)?;
    let from_h = Polyhedron::from_h(n, &eqs, &ineqs);
    let from_v = Polyhedron::from_v(n, &verts, &rays, &lin);
    if from_h != from_v {
        return Err(invalid("H- and V-descriptions of a cell disagree"));
    }
    let dim = v.get("dim").and_then(Value::as_u64).map(|d| d as usize);
    if dim != from_h.dim() {
        return Err(invalid("cell dimension does not match its description"));
    }
    if polyhedron_to_json(&from_h) != *v {
        return Err(invalid("cell data is not in canonical form"));
    }
    Ok(from_h)
}

/// Parse and validate a complex: every cell must be canonical with
/// matching H- and V-descriptions, cells maximal and sorted, and the
/// f-vector consistent.
pub fn complex_from_json(v: &Value) -> Result<PolyhedralComplex> {
    let n = v
        .get("ambient_dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| invalid("missing ambient_dim"))? as usize;
    let cells = v
        .get("cells")
        .and_then(Value::as_array)
        .ok_or_else(|| invalid("missing cells"))?;
    let parsed: Vec<Polyhedron> = cells.iter().map(|c| read_cell(c, n)).collect::<Result<_>>()?;
    let complex = PolyhedralComplex::new(n, parsed.clone());
    if complex.cells() != parsed.as_slice() {
        return Err(invalid("cells are not maximal or not in canonical order"));
    }
    let f: Option<Vec<usize>> = v
        .get("f_vector")
        .and_then(Value::as_array)
        .and_then(|a| a.iter().map(|x| x.as_u64().map(|y| y as usize)).collect());
    if f.as_ref() != Some(&complex.f_vector()) {
        return Err(invalid("f_vector does not match the cells"));
    }
    Ok(complex)
}

pub fn validate_complex_json(v: &Value) -> Result<()> {
    complex_from_json(v).map(|_| ())
}
