//! Sparse exact linear algebra on tensor powers of the fundamental module.

mod inverse;
mod json;
mod sparse;
mod tensor;

pub use sparse::{Difference, SparseMat};
pub use tensor::{digits, from_digits, legs_of};
