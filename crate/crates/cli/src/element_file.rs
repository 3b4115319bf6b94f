//! JSON element files for `ejalab spectral`.
//!
//! ```json
//! { "factors": [ 2.0, [1.0, 0.5, 0.0], [[1.0, [0.0, 1.0]], [[0.0, -1.0], 2.0]] ] }
//! ```
//!
//! One entry per factor of the spec, in order. A real-line factor is a
//! number; `spin(n)` is an array `[s, x1, ..., xn]`; `H(k,K)` is a dense
//! `k × k` array whose entries are either plain numbers (real entries) or
//! coordinate tuples of length 1, 2, 4 or 8 for R, C, H, O. Matrices must be
//! Hermitian. `H(1,K)` and `H(2,K)` keep their matrix shape.

use ejalab::jordan::{Block, FactorModel, HermitianMatrix};
use ejalab::spec_text::RawFactor;
use ejalab::{Element, Error, JordanAlgebra, Result, Scalar, ScalarKind};
use serde_json::{json, Value};

/// The concrete algebra for a spec as written.
pub fn algebra_for_raw(raw: &[RawFactor]) -> Result<JordanAlgebra> {
    JordanAlgebra::new(
        raw.iter()
            .map(|f| match *f {
                RawFactor::Real => FactorModel::RealLine,
                RawFactor::Spin(n) => FactorModel::Spin { n },
                RawFactor::Hermitian { k, scalar } => FactorModel::Hermitian { k, scalar },
            })
            .collect(),
    )
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Usage(format!("element file: {}", msg.into()))
}

fn number(v: &Value, at: &str) -> Result<f64> {
    v.as_f64().ok_or_else(|| bad(format!("{at}: expected a number")))
}

fn numbers(v: &Value, at: &str) -> Result<Vec<f64>> {
    v.as_array()
        .ok_or_else(|| bad(format!("{at}: expected an array")))?
        .iter()
        .enumerate()
        .map(|(i, x)| number(x, &format!("{at}[{i}]")))
        .collect()
}

fn scalar(v: &Value, kind: ScalarKind, at: &str) -> Result<Scalar> {
    if let Some(x) = v.as_f64() {
        return Ok(Scalar::real(kind, x));
    }
    let c = numbers(v, at)?;
    if c.len() != kind.arity() {
        return Err(bad(format!(
            "{at}: {kind} entries have {} coordinates, got {}",
            kind.arity(),
            c.len()
        )));
    }
    Scalar::new(kind, &c).map_err(|e| bad(format!("{at}: {e}")))
}

pub fn parse_element(algebra: &JordanAlgebra, doc: &Value, tol: f64) -> Result<Element> {
    let factors = doc
        .get("factors")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"factors\" array"))?;
    if factors.len() != algebra.factors().len() {
        return Err(bad(format!(
            "spec has {} factors, file has {}",
            algebra.factors().len(),
            factors.len()
        )));
    }
    let mut blocks = Vec::with_capacity(factors.len());
    for (i, (model, v)) in algebra.factors().iter().zip(factors).enumerate() {
        let at = format!("factors[{i}]");
        let block = match *model {
            FactorModel::RealLine => Block::Real(number(v, &at)?),
            FactorModel::Spin { n } => {
                let c = numbers(v, &at)?;
                if c.len() != n + 1 {
                    return Err(bad(format!("{at}: spin({n}) needs {} numbers, got {}", n + 1, c.len())));
                }
                Block::Spin {
                    s: c[0],
                    x: c[1..].to_vec(),
                }
            }
            FactorModel::Hermitian { k, scalar: kind } => {
                let rows = v
                    .as_array()
                    .filter(|r| r.len() == k)
                    .ok_or_else(|| bad(format!("{at}: expected {k} rows")))?;
                let mut entries = Vec::with_capacity(k * k);
                for (r, row) in rows.iter().enumerate() {
                    let row = row
                        .as_array()
                        .filter(|c| c.len() == k)
                        .ok_or_else(|| bad(format!("{at}[{r}]: expected {k} entries")))?;
                    for (c, x) in row.iter().enumerate() {
                        entries.push(scalar(x, kind, &format!("{at}[{r}][{c}]"))?);
                    }
                }
                let m = HermitianMatrix::from_entries(k, kind, entries, tol.max(1e-12))
                    .map_err(|e| bad(format!("{at}: {e}")))?;
                Block::Matrix(m)
            }
        };
        blocks.push(block);
    }
    algebra.element(blocks)
}

/// Inverse of [`parse_element`]; real matrix entries are written as numbers.
pub fn element_to_json(a: &Element) -> Value {
    let factors: Vec<Value> = a
        .blocks()
        .iter()
        .map(|b| match b {
            Block::Real(x) => json!(x),
            Block::Spin { s, x } => {
                let mut v = vec![*s];
                v.extend_from_slice(x);
                json!(v)
            }
            Block::Matrix(m) => {
                let k = m.size();
                let rows: Vec<Value> = (0..k)
                    .map(|i| {
                        (0..k)
                            .map(|j| {
                                let e = m.get(i, j);
                                if m.kind() == ScalarKind::Real {
                                    json!(e.re())
                                } else {
                                    json!(e.coords())
                                }
                            })
                            .collect()
                    })
                    .collect();
                json!(rows)
            }
        })
        .collect();
    json!({ "factors": factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ejalab::spec_text::parse_spec_raw;

    #[test]
    fn round_trip() {
        let raw = parse_spec_raw("R (+) spin(2) (+) H(2,C)").unwrap().raw;
        let alg = algebra_for_raw(&raw).unwrap();
        let doc: Value = serde_json::from_str(
            r#"{"factors": [2.0, [1.0, 0.5, 0.0], [[1.0, [0.0, 1.0]], [[0.0, -1.0], 2.0]]]}"#,
        )
        .unwrap();
        let a = parse_element(&alg, &doc, 1e-9).unwrap();
        let back = parse_element(&alg, &element_to_json(&a), 1e-9).unwrap();
        assert_eq!(a, back);
    }

    #[test]
    fn rejects_non_hermitian_and_bad_shapes() {
        let alg = algebra_for_raw(&parse_spec_raw("H(2,C)").unwrap().raw).unwrap();
        let not_herm: Value = serde_json::from_str(r#"{"factors": [[[1, [0, 1]], [[0, 1], 2]]]}"#).unwrap();
        assert!(parse_element(&alg, &not_herm, 1e-9).is_err());
        let short: Value = serde_json::from_str(r#"{"factors": [[[1, 0]]]}"#).unwrap();
        assert!(parse_element(&alg, &short, 1e-9).is_err());
        let arity: Value = serde_json::from_str(r#"{"factors": [[[1, [0, 1, 0]], [[0, -1, 0], 2]]]}"#).unwrap();
        assert!(parse_element(&alg, &arity, 1e-9).is_err());
    }
}
