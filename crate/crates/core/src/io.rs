//! JSON serialization for algebras and multilinear maps.
//!
//! Rationals travel as canonical strings ("p/q" or "p"), so writing and
//! re-reading a value is bit-exact. Output key order is fixed by the
//! struct definitions; serde_json maps are sorted.

use crate::algebra::Algebra;
use crate::error::CoreError;
use crate::multilinear::MultilinearMap;
use crate::rat::{parse_rat, rat_to_string, Rat};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    dim: usize,
    basis: Vec<String>,
    table: Vec<Vec<Vec<String>>>,
}

pub fn algebra_to_json(a: &Algebra) -> String {
    let doc = AlgebraJson {
        dim: a.dim,
        basis: a.basis.clone(),
        table: a
            .table_nested()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| cell.iter().map(rat_to_string).collect())
                    .collect()
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("algebra serialization cannot fail");
    s.push('\n');
    s
}

pub fn algebra_from_json(text: &str) -> Result<Algebra, CoreError> {
    let doc: AlgebraJson = serde_json::from_str(text)
        .map_err(|e| CoreError::MalformedInput(format!("bad algebra JSON: {e}")))?;
    if doc.basis.len() != doc.dim {
        return Err(CoreError::MalformedInput(format!(
            "dim is {} but basis lists {} names",
            doc.dim,
            doc.basis.len()
        )));
    }
    let table: Vec<Vec<Vec<Rat>>> = doc
        .table
        .iter()
        .map(|row| {
            row.iter()
                .map(|cell| cell.iter().map(|s| parse_rat(s)).collect())
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;
    Algebra::from_table(doc.basis, table)
}

#[derive(Serialize, Deserialize)]
struct MapJson {
    arity: usize,
    dim: usize,
    coeffs: serde_json::Value,
}

fn coeffs_to_value(m: &MultilinearMap, prefix: &mut Vec<usize>) -> serde_json::Value {
    if prefix.len() == m.arity {
        let v: Vec<String> = (0..m.dim)
            .map(|k| rat_to_string(m.coeff(prefix, k)))
            .collect();
        return serde_json::json!(v);
    }
    let items: Vec<serde_json::Value> = (0..m.dim)
        .map(|i| {
            prefix.push(i);
            let v = coeffs_to_value(m, prefix);
            prefix.pop();
            v
        })
        .collect();
    serde_json::Value::Array(items)
}

fn coeffs_from_value(
    m: &mut MultilinearMap,
    value: &serde_json::Value,
    prefix: &mut Vec<usize>,
) -> Result<(), CoreError> {
    let arr = value
        .as_array()
        .ok_or_else(|| CoreError::MalformedInput("coeffs: expected nested arrays".into()))?;
    if arr.len() != m.dim {
        return Err(CoreError::MalformedInput(format!(
            "coeffs: expected {} entries, found {}",
            m.dim,
            arr.len()
        )));
    }
    if prefix.len() == m.arity {
        for (k, cell) in arr.iter().enumerate() {
            let s = cell
                .as_str()
                .ok_or_else(|| CoreError::MalformedInput("coeffs: expected rational strings".into()))?;
            m.set_coeff(prefix, k, parse_rat(s)?);
        }
        return Ok(());
    }
    for (i, sub) in arr.iter().enumerate() {
        prefix.push(i);
        coeffs_from_value(m, sub, prefix)?;
        prefix.pop();
    }
    Ok(())
}

pub fn map_to_json(m: &MultilinearMap) -> String {
    let doc = MapJson {
        arity: m.arity,
        dim: m.dim,
        coeffs: coeffs_to_value(m, &mut Vec::new()),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("map serialization cannot fail");
    s.push('\n');
    s
}

pub fn map_from_json(text: &str) -> Result<MultilinearMap, CoreError> {
    let doc: MapJson = serde_json::from_str(text)
        .map_err(|e| CoreError::MalformedInput(format!("bad map JSON: {e}")))?;
    if doc.arity == 0 {
        return Err(CoreError::MalformedInput("arity must be at least 1".into()));
    }
    let mut m = MultilinearMap::zero(doc.arity, doc.dim);
    coeffs_from_value(&mut m, &doc.coeffs, &mut Vec::new())?;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    #[test]
    fn algebra_round_trip_is_bit_exact() {
        let mut a = Algebra::zero_algebra(2);
        a.set_entry(0, 0, 1, rat(-3, 7));
        a.set_entry(1, 0, 0, rint(2));
        let text = algebra_to_json(&a);
        let b = algebra_from_json(&text).unwrap();
        assert_eq!(a, b);
        assert_eq!(algebra_to_json(&b), text);
        assert!(text.contains("\"-3/7\""));
    }

    #[test]
    fn algebra_json_rejects_inconsistent_dimensions() {
        let text = r#"{"dim": 2, "basis": ["e1"], "table": []}"#;
        assert!(algebra_from_json(text).is_err());
        let text = r#"{"dim": 1, "basis": ["e1"], "table": [[["1/0"]]]}"#;
        assert!(algebra_from_json(text).is_err());
        assert!(algebra_from_json("not json").is_err());
    }

    #[test]
    fn map_round_trip_is_bit_exact() {
        let mut m = MultilinearMap::zero(2, 2);
        m.set_coeff(&[0, 1], 0, rat(1, 2));
        m.set_coeff(&[1, 1], 1, rint(-4));
        let text = map_to_json(&m);
        let n = map_from_json(&text).unwrap();
        assert_eq!(m, n);
        assert_eq!(map_to_json(&n), text);
    }

    #[test]
    fn map_json_rejects_ragged_coeffs() {
        let text = r#"{"arity": 1, "dim": 2, "coeffs": [["1"], ["2", "3"]]}"#;
        assert!(map_from_json(text).is_err());
        let text = r#"{"arity": 0, "dim": 2, "coeffs": []}"#;
        assert!(map_from_json(text).is_err());
    }
}
