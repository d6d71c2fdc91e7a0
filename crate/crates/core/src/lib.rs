//! Exact symbolic construction of the standard gl(n) R-matrix, the
//! three-stage Drinfeld twist of U_q(gl(2N+1)) and the resulting esoteric
//! (Fronsdal–Galindo) R-matrix in the fundamental representation, together
//! with exact checkers for every identity they satisfy.

pub mod error;
pub mod field;
pub mod linalg;
pub mod qgroup;
pub mod twist;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Assignment, FieldElem, Numeric, Rational, Scalar, Symbolic, Valuation, Var, VarTable};
pub use linalg::SparseMat;
pub use qgroup::{Rep, RootDatum, Word};
pub use twist::{TwistElement, TwistParams};
pub use verify::{CheckKind, CheckReport};
