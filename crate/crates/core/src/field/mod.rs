//! Exact coefficient field: Laurent polynomials and rational functions over Q
//! in the variables `s` (with `q = s^2`) and the twist parameters.

mod assign;
mod gcd;
mod parse;
mod poly;
mod ratfunc;
mod scalar;
mod var;

pub use assign::{Assignment, Numeric, Symbolic, Valuation};
pub use gcd::poly_gcd;
pub use parse::{parse_field_elem, parse_rational};
pub use poly::{LaurentPoly, Monomial};
pub use ratfunc::FieldElem;
pub use scalar::{q_factorial, q_int, Scalar};
pub use var::{Var, VarTable};

pub use num_rational::BigRational as Rational;
