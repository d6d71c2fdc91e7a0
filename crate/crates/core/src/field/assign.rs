use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde_json::Value;

use crate::error::{Error, Result};

use super::parse::parse_rational;
use super::poly::render_rational;
use super::ratfunc::FieldElem;
use super::scalar::Scalar;
use super::var::Var;

/// A rational point: variable to exact rational value.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Assignment(BTreeMap<Var, BigRational>);

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn with(mut self, v: Var, value: impl Into<BigRational>) -> Self {
        self.0.insert(v, value.into());
        self
    }

    pub fn insert(&mut self, v: Var, value: BigRational) {
        self.0.insert(v, value);
    }

    pub fn get(&self, v: Var) -> Option<&BigRational> {
        self.0.get(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &BigRational)> {
        self.0.iter()
    }

    /// `{"s": "2", "mu1": "3", ...}`; values are rational strings (bare
    /// JSON integers are accepted too).
    pub fn from_json(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Invalid(format!("assignment JSON: {e}")))?;
        let Value::Object(map) = value else {
            return Err(Error::Invalid("assignment must be a JSON object".into()));
        };
        let mut out = Assignment::new();
        for (name, v) in map {
            let var: Var = name.parse()?;
            let r = match v {
                Value::String(s) => parse_rational(&s)?,
                Value::Number(n) if n.is_i64() => BigRational::from_integer(n.as_i64().unwrap().into()),
                other => {
                    return Err(Error::Invalid(format!(
                        "value of {name} must be a rational string, got {other}"
                    )))
                }
            };
            out.insert(var, r);
        }
        Ok(out)
    }

    pub fn to_json_value(&self) -> Value {
        Value::Object(
            self.0
                .iter()
                .map(|(v, r)| (v.to_string(), Value::String(render_rational(r))))
                .collect(),
        )
    }

    pub fn value(&self, v: Var) -> Result<BigRational> {
        self.0
            .get(&v)
            .cloned()
            .ok_or_else(|| Error::MissingVariable(v.to_string()))
    }

    /// Exact value of `x` at this point.
    pub fn substitute(&self, x: &FieldElem) -> Result<BigRational> {
        let mut value = |v: Var| self.value(v);
        let n = x.numerator().evaluate(&mut value)?;
        let d = x.denominator().evaluate(&mut value)?;
        if Scalar::is_zero(&d) {
            return Err(Error::Pole {
                assignment: self.to_string(),
                denominator: x.denominator().to_string(),
            });
        }
        n.div(&d)
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, r)| format!("{v}={}", render_rational(r)))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// How symbolic quantities are turned into matrix entries.
pub trait Valuation: Clone + Send + Sync {
    type Elem: Scalar;
    fn var(&self, v: Var) -> Result<Self::Elem>;
    fn lift(&self, x: &FieldElem) -> Result<Self::Elem>;
    /// `None` for symbolic mode.
    fn assignment(&self) -> Option<&Assignment>;
}

/// Keeps every variable symbolic.
#[derive(Clone, Copy, Debug, Default)]
pub struct Symbolic;

impl Valuation for Symbolic {
    type Elem = FieldElem;
    fn var(&self, v: Var) -> Result<FieldElem> {
        Ok(FieldElem::var(v))
    }
    fn lift(&self, x: &FieldElem) -> Result<FieldElem> {
        Ok(x.clone())
    }
    fn assignment(&self) -> Option<&Assignment> {
        None
    }
}

/// Evaluates at a rational point.
#[derive(Clone, Debug)]
pub struct Numeric(pub Assignment);

impl Valuation for Numeric {
    type Elem = BigRational;
    fn var(&self, v: Var) -> Result<BigRational> {
        self.0.value(v)
    }
    fn lift(&self, x: &FieldElem) -> Result<BigRational> {
        self.0.substitute(x)
    }
    fn assignment(&self) -> Option<&Assignment> {
        Some(&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn substitution_examples() {
        let at2 = Assignment::new().with(Var::S, r(2, 1));
        let x: FieldElem = "s^2+1".parse().unwrap();
        assert_eq!(at2.substitute(&x).unwrap(), r(5, 1));
        assert_eq!(at2.substitute(&FieldElem::omega()).unwrap(), r(15, 4));
    }

    #[test]
    fn pole_is_reported() {
        let at1 = Assignment::new().with(Var::S, r(1, 1));
        let x: FieldElem = "(1)/(s-1)".parse().unwrap();
        match at1.substitute(&x) {
            Err(Error::Pole {
                assignment,
                denominator,
            }) => {
                assert_eq!(assignment, "{s=1}");
                assert_eq!(denominator, "s-1");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_variable() {
        let a = Assignment::new().with(Var::S, r(2, 1));
        assert_eq!(
            a.substitute(&FieldElem::var(Var::Mu(1))),
            Err(Error::MissingVariable("mu1".into()))
        );
    }

    #[test]
    fn json_round_trip() {
        let a = Assignment::from_json(r#"{"s": "2", "mu1": "-3/5", "a_12": 13}"#).unwrap();
        assert_eq!(a.value(Var::Mu(1)).unwrap(), r(-3, 5));
        assert_eq!(a.value(Var::A(1, 2)).unwrap(), r(13, 1));
        let back = Assignment::from_json(&a.to_json_value().to_string()).unwrap();
        assert_eq!(a, back);
        assert!(Assignment::from_json(r#"{"q": "2"}"#).is_err());
        assert!(Assignment::from_json(r#"[1]"#).is_err());
    }
}
