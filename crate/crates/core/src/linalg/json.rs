//! `{"dim": d, "entries": [[row, col, "<canonical string>"], ...]}` with
//! 1-based indices sorted by (row, col).

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{FieldElem, Scalar};

use super::sparse::SparseMat;

impl<T: Scalar> SparseMat<T> {
    pub fn to_json_value(&self) -> Value {
        let entries: Vec<Value> = self
            .entries()
            .map(|(r, c, v)| json!([r + 1, c + 1, v.canonical_string()]))
            .collect();
        json!({ "dim": self.dim(), "entries": entries })
    }

    pub fn to_json_string(&self) -> String {
        self.to_json_value().to_string()
    }
}

impl SparseMat<FieldElem> {
    pub fn from_json_value(value: &Value) -> Result<Self> {
        let bad = |msg: &str| Error::Invalid(format!("matrix JSON: {msg}"));
        let dim = value
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing \"dim\""))? as usize;
        let entries = value
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"entries\""))?;
        let mut out = SparseMat::zeros(dim);
        for e in entries {
            let (r, c, s) = match e.as_array().map(Vec::as_slice) {
                Some([r, c, s]) => (
                    r.as_u64().ok_or_else(|| bad("row must be an integer"))? as usize,
                    c.as_u64().ok_or_else(|| bad("col must be an integer"))? as usize,
                    s.as_str().ok_or_else(|| bad("value must be a string"))?,
                ),
                _ => return Err(bad("entry must be [row, col, value]")),
            };
            if r == 0 || c == 0 || r > dim || c > dim {
                return Err(bad(&format!("index ({r}, {c}) out of range")));
            }
            out.set(r - 1, c - 1, s.parse()?);
        }
        Ok(out)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Invalid(format!("matrix JSON: {e}")))?;
        Self::from_json_value(&value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut m = SparseMat::<FieldElem>::zeros(4);
        m.set(1, 2, FieldElem::omega());
        m.set(0, 0, FieldElem::q());
        let text = m.to_json_string();
        assert_eq!(text, r#"{"dim":4,"entries":[[1,1,"s^2"],[2,3,"(s^4-1)/(s^2)"]]}"#);
        assert_eq!(SparseMat::from_json_str(&text).unwrap(), m);
        assert!(SparseMat::from_json_str(r#"{"dim":2,"entries":[[3,1,"1"]]}"#).is_err());
    }
}
