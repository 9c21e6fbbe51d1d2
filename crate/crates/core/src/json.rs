//! JSON encoding of quivers, dimension vectors and representations.
//!
//! Objects are `serde_json::Map`, which keeps keys sorted, so output is
//! deterministic. Prime-field entries are integers; rational entries are
//! strings `"a/b"` (integers are accepted on input for both).

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::linalg::{parse_rational, FieldSpec, Matrix, Scalar};
use crate::quiver::{DimVector, Quiver};
use crate::rep::{Representation, SubmodulePoint};

fn bad(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::InvalidInput(format!("at {path}: {msg}"))
}

/// Parses text into a JSON value; errors carry line and column.
pub fn parse_text(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("malformed JSON: {e}")))
}

fn as_id(v: &Value, path: &str) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_u64() || n.is_i64() => Ok(n.to_string()),
        _ => Err(bad(path, "expected a string id")),
    }
}

fn field_of<'a>(obj: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| bad(path, format!("missing field `{key}`")))
}

pub fn quiver_to_json(q: &Quiver) -> Value {
    let arrows: Vec<Value> = q
        .arrows()
        .iter()
        .map(|a| json!({"id": a.id, "from": q.vertices()[a.source], "to": q.vertices()[a.target]}))
        .collect();
    json!({"vertices": q.vertices(), "arrows": arrows})
}

pub fn quiver_from_json(v: &Value) -> Result<Quiver> {
    let verts = field_of(v, "vertices", "quiver")?
        .as_array()
        .ok_or_else(|| bad("quiver.vertices", "expected an array"))?
        .iter()
        .enumerate()
        .map(|(i, x)| as_id(x, &format!("quiver.vertices[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let arrows = match v.get("arrows") {
        None => Vec::new(),
        Some(a) => a
            .as_array()
            .ok_or_else(|| bad("quiver.arrows", "expected an array"))?
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let path = format!("quiver.arrows[{i}]");
                Ok((
                    as_id(field_of(x, "id", &path)?, &path)?,
                    as_id(field_of(x, "from", &path)?, &path)?,
                    as_id(field_of(x, "to", &path)?, &path)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?,
    };
    Quiver::new(verts, arrows)
}

pub fn field_to_json(f: FieldSpec) -> Value {
    match f {
        FieldSpec::Prime(p) => json!({"type": "prime", "p": p}),
        FieldSpec::Rational => json!({"type": "rational"}),
    }
}

pub fn field_from_json(v: &Value) -> Result<FieldSpec> {
    match field_of(v, "type", "field")?.as_str() {
        Some("prime") => {
            let p = field_of(v, "p", "field")?
                .as_u64()
                .ok_or_else(|| bad("field.p", "expected a positive integer"))?;
            FieldSpec::prime(p)
        }
        Some("rational") => Ok(FieldSpec::Rational),
        _ => Err(bad("field.type", "expected \"prime\" or \"rational\"")),
    }
}

pub fn dimvec_to_json(q: &Quiver, d: &DimVector) -> Value {
    let m: Map<String, Value> = q.vertices().iter().cloned().zip(d.0.iter().map(|&x| json!(x))).collect();
    Value::Object(m)
}

/// Missing vertices count as zero.
pub fn dimvec_from_json(q: &Quiver, v: &Value) -> Result<DimVector> {
    let obj = v.as_object().ok_or_else(|| bad("dims", "expected an object {vertex: int}"))?;
    let mut d = DimVector::zero(q);
    for (k, x) in obj {
        let i = q.vertex_index(k)?;
        d.0[i] = x
            .as_u64()
            .ok_or_else(|| bad(&format!("dims.{k}"), "expected a non-negative integer"))? as usize;
    }
    Ok(d)
}

fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Prime(x) => json!(x),
        Scalar::Rational(_) => json!(s.to_string()),
    }
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    let s = m.scalars();
    let rows: Vec<Value> = (0..m.rows())
        .map(|r| Value::Array(s[r * m.cols()..(r + 1) * m.cols()].iter().map(scalar_to_json).collect()))
        .collect();
    Value::Array(rows)
}

/// `{vertex: basis}` for a submodule point.
pub fn point_to_json(q: &Quiver, pt: &SubmodulePoint) -> Value {
    let m: Map<String, Value> = q
        .vertices()
        .iter()
        .cloned()
        .zip(pt.subspaces.iter().map(matrix_to_json))
        .collect();
    Value::Object(m)
}

fn scalar_from_json(field: FieldSpec, v: &Value, path: &str) -> Result<Scalar> {
    match v {
        Value::Number(n) => {
            let x = n.as_i64().ok_or_else(|| bad(path, "expected an integer entry"))?;
            Ok(field.scalar(x))
        }
        Value::String(s) => match field {
            FieldSpec::Rational => Ok(Scalar::Rational(parse_rational(s).map_err(|_| bad(path, "bad rational"))?)),
            FieldSpec::Prime(_) => {
                let x: i64 = s.trim().parse().map_err(|_| bad(path, "expected an integer entry"))?;
                Ok(field.scalar(x))
            }
        },
        _ => Err(bad(path, "expected a number")),
    }
}

/// Reads a `rows x cols` matrix; an empty list stands for any matrix with no rows.
pub fn matrix_from_json(field: FieldSpec, rows: usize, cols: usize, v: &Value, path: &str) -> Result<Matrix> {
    let arr = v.as_array().ok_or_else(|| bad(path, "expected a list of rows"))?;
    if arr.is_empty() && (rows == 0 || cols == 0) {
        return Ok(Matrix::zeros(field, rows, cols));
    }
    if arr.len() != rows {
        return Err(bad(path, format!("expected {rows} rows, found {}", arr.len())));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (r, row) in arr.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| bad(&format!("{path}[{r}]"), "expected a row"))?;
        if row.len() != cols {
            return Err(bad(&format!("{path}[{r}]"), format!("expected {cols} entries, found {}", row.len())));
        }
        for (c, x) in row.iter().enumerate() {
            entries.push(scalar_from_json(field, x, &format!("{path}[{r}][{c}]"))?);
        }
    }
    Matrix::from_scalars(field, rows, cols, entries)
}

pub fn rep_to_json(m: &Representation) -> Value {
    let q = m.quiver();
    let mats: Map<String, Value> = q
        .arrows()
        .iter()
        .zip(m.matrices())
        .map(|(a, x)| (a.id.clone(), matrix_to_json(x)))
        .collect();
    json!({
        "quiver": quiver_to_json(q),
        "field": field_to_json(m.field()),
        "dims": dimvec_to_json(q, m.dims()),
        "matrices": mats,
    })
}

/// `field_override` replaces the field stored in the document (entries are
/// then reduced into the new field).
pub fn rep_from_json(v: &Value, field_override: Option<FieldSpec>) -> Result<Representation> {
    let q = Arc::new(quiver_from_json(field_of(v, "quiver", "representation")?)?);
    let field = match (field_override, v.get("field")) {
        (Some(f), _) => f,
        (None, Some(f)) => field_from_json(f)?,
        (None, None) => return Err(bad("representation", "missing field `field`")),
    };
    let dims = dimvec_from_json(&q, field_of(v, "dims", "representation")?)?;
    let mats_obj = match v.get("matrices") {
        None => Map::new(),
        Some(x) => x.as_object().ok_or_else(|| bad("matrices", "expected an object"))?.clone(),
    };
    for k in mats_obj.keys() {
        q.arrow_index(k)?;
    }
    let mut mats = Vec::new();
    for a in q.arrows() {
        let (r, c) = (dims.0[a.target], dims.0[a.source]);
        let path = format!("matrices.{}", a.id);
        mats.push(match mats_obj.get(&a.id) {
            Some(x) => matrix_from_json(field, r, c, x, &path)?,
            None if r == 0 || c == 0 => Matrix::zeros(field, r, c),
            None => return Err(bad(&path, "missing matrix")),
        });
    }
    Representation::new(q, field, dims, mats)
}

pub fn parse_quiver(text: &str) -> Result<Quiver> {
    quiver_from_json(&parse_text(text)?)
}

pub fn parse_representation(text: &str, field_override: Option<FieldSpec>) -> Result<Representation> {
    rep_from_json(&parse_text(text)?, field_override)
}
