use std::fmt;

use serde_json::{json, Value};

use crate::field::Assignment;
use crate::linalg::Difference;

/// What a check was run on: the half-rank `N` of `gl(2N+1)` or the rank
/// `n` of a plain `gl(n)` computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Size {
    Half(usize),
    Rank(usize),
}

impl Size {
    fn key(self) -> (&'static str, usize) {
        match self {
            Size::Half(n) => ("N", n),
            Size::Rank(n) => ("n", n),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Mode {
    Symbolic,
    Numeric(Assignment),
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Symbolic => "symbolic",
            Mode::Numeric(_) => "numeric-rational",
        }
    }
}

/// First failing entry. `row`/`col` are 1-based and absent for scalar
/// failures (e.g. a wrong count).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub row: Option<usize>,
    pub col: Option<usize>,
    pub lhs: String,
    pub rhs: String,
    pub context: String,
}

impl Witness {
    pub fn entry(d: Difference, context: impl Into<String>) -> Self {
        Witness {
            row: Some(d.row + 1),
            col: Some(d.col + 1),
            lhs: d.lhs,
            rhs: d.rhs,
            context: context.into(),
        }
    }

    pub fn scalar(lhs: impl ToString, rhs: impl ToString, context: impl Into<String>) -> Self {
        Witness {
            row: None,
            col: None,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            context: context.into(),
        }
    }

    fn to_json_value(&self) -> Value {
        json!({
            "row": self.row,
            "col": self.col,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "context": self.context,
        })
    }
}

/// Outcome of one check. Passing means no witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckReport {
    pub check: String,
    pub size: Size,
    pub mode: Mode,
    pub witness: Option<Witness>,
    pub millis: u64,
}

impl CheckReport {
    pub fn pass(&self) -> bool {
        self.witness.is_none()
    }

    /// Keys come out sorted, so equal reports serialize identically up to
    /// `millis`.
    pub fn to_json_value(&self) -> Value {
        let (size_key, size) = self.size.key();
        let assignment = match &self.mode {
            Mode::Symbolic => Value::Null,
            Mode::Numeric(a) => a.to_json_value(),
        };
        let mut v = json!({
            "check": self.check,
            "mode": self.mode.name(),
            "assignment": assignment,
            "pass": self.pass(),
            "witness": self.witness.as_ref().map(Witness::to_json_value),
            "millis": self.millis,
        });
        v[size_key] = json!(size);
        v
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("report JSON")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (key, size) = self.size.key();
        write!(f, "{} {key}={size} {}", self.check, self.mode.name())?;
        if let Mode::Numeric(a) = &self.mode {
            write!(f, " {a}")?;
        }
        match &self.witness {
            None => write!(f, ": pass"),
            Some(w) => {
                write!(f, ": FAIL ({})", w.context)?;
                if let (Some(r), Some(c)) = (w.row, w.col) {
                    write!(f, " at ({r}, {c})")?;
                }
                write!(f, " lhs={} rhs={}", w.lhs, w.rhs)
            }
        }
    }
}

/// Reports as a JSON array in the given order.
pub fn reports_to_json(reports: &[CheckReport]) -> String {
    let values: Vec<Value> = reports.iter().map(CheckReport::to_json_value).collect();
    serde_json::to_string_pretty(&values).expect("report JSON")
}
