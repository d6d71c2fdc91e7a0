//! Root data, words in the generators, the fundamental representation and
//! coproduct images of words on tensor powers.

mod relations;
mod rep;
mod roots;
mod word;

pub use relations::{relation_suite, RelationCheck};
pub use rep::Rep;
pub use roots::{height, RootDatum};
pub use word::{e_root, f_root, g_root, Atom, Word};
