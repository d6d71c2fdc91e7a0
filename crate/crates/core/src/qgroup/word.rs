use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{FieldElem, Scalar};

/// Generator symbols. Indices are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Atom {
    E(usize),
    F(usize),
    /// The diagonal group-like `s^(sum_i d_i e_ii)`, one exponent per basis
    /// index.
    Group(Vec<i32>),
}

/// A linear combination of products of atoms.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Word {
    terms: Vec<(FieldElem, Vec<Atom>)>,
}

impl Word {
    pub fn zero() -> Self {
        Word::default()
    }

    pub fn one() -> Self {
        Word {
            terms: vec![(FieldElem::one(), Vec::new())],
        }
    }

    pub fn atom(a: Atom) -> Self {
        Word {
            terms: vec![(FieldElem::one(), vec![a])],
        }
    }

    pub fn e(i: usize) -> Self {
        Self::atom(Atom::E(i))
    }

    pub fn f(i: usize) -> Self {
        Self::atom(Atom::F(i))
    }

    pub fn group(exponents: Vec<i32>) -> Self {
        Self::atom(Atom::Group(exponents))
    }

    pub fn terms(&self) -> &[(FieldElem, Vec<Atom>)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &FieldElem) -> Word {
        if c.is_zero() {
            return Word::zero();
        }
        Word {
            terms: self.terms.iter().map(|(k, a)| (k.mul(c), a.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut atoms = x.clone();
                atoms.extend(y.iter().cloned());
                terms.push((a.mul(b), atoms));
            }
        }
        Word { terms }
    }

    pub fn add(&self, other: &Word) -> Word {
        let mut terms = self.terms.clone();
        for (c, atoms) in &other.terms {
            match terms.iter_mut().find(|(_, a)| a == atoms) {
                Some(slot) => slot.0 = slot.0.add(c),
                None => terms.push((c.clone(), atoms.clone())),
            }
        }
        terms.retain(|(c, _)| !c.is_zero());
        Word { terms }
    }

    pub fn sub(&self, other: &Word) -> Word {
        self.add(&other.scale(&FieldElem::from(-1)))
    }

    /// `[{"coeff": str, "atoms": [{"e": i} | {"f": i} | {"group": [..]}]}]`
    pub fn to_json_value(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(c, atoms)| {
                    let atoms: Vec<Value> = atoms
                        .iter()
                        .map(|a| match a {
                            Atom::E(i) => json!({ "e": i }),
                            Atom::F(i) => json!({ "f": i }),
                            Atom::Group(d) => json!({ "group": d }),
                        })
                        .collect();
                    json!({ "coeff": c.canonical_string(), "atoms": atoms })
                })
                .collect(),
        )
    }

    pub fn from_json_value(value: &Value) -> Result<Word> {
        let bad = |m: &str| Error::Invalid(format!("word JSON: {m}"));
        let list = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut terms = Vec::new();
        for t in list {
            let coeff: FieldElem = t
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("missing coeff"))?
                .parse()?;
            let atoms = t
                .get("atoms")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing atoms"))?
                .iter()
                .map(|a| {
                    let index = |key: &str| a.get(key).and_then(Value::as_u64).map(|i| i as usize);
                    if let Some(i) = index("e") {
                        Ok(Atom::E(i))
                    } else if let Some(i) = index("f") {
                        Ok(Atom::F(i))
                    } else if let Some(d) = a.get("group").and_then(Value::as_array) {
                        d.iter()
                            .map(|x| x.as_i64().map(|x| x as i32).ok_or_else(|| bad("group exponent")))
                            .collect::<Result<Vec<i32>>>()
                            .map(Atom::Group)
                    } else {
                        Err(bad("unknown atom"))
                    }
                })
                .collect::<Result<Vec<Atom>>>()?;
            terms.push((coeff, atoms));
        }
        Ok(Word { terms })
    }
}

/// `e_α` for `α = α_(i,j)`, built by peeling the last simple root:
/// `e_(α+β) = e_α e_β - q e_β e_α`.
pub fn e_root(i: usize, j: usize, simple: &impl Fn(usize) -> Word) -> Word {
    if j == i + 1 {
        return simple(i);
    }
    let a = e_root(i, j - 1, simple);
    let b = simple(j - 1);
    a.mul(&b).sub(&b.mul(&a).scale(&FieldElem::q()))
}

/// `f_(α+β) = f_β f_α - q^-1 f_α f_β`, same segment split as [`e_root`].
pub fn f_root(i: usize, j: usize, simple: &impl Fn(usize) -> Word) -> Word {
    if j == i + 1 {
        return simple(i);
    }
    let a = f_root(i, j - 1, simple);
    let b = simple(j - 1);
    b.mul(&a)
        .sub(&a.mul(&b).scale(&FieldElem::q().inv().expect("q is nonzero")))
}

/// `g_(α')` for `α = α_(i,j)`: `g_(α'_k) = f_(n-k)` on simple roots and
/// `g_((α+β)') = g_(β') g_(α') - q^-1 g_(α') g_(β')`. `simple_f` receives the
/// already-primed simple index.
pub fn g_root(i: usize, j: usize, n: usize, simple_f: &impl Fn(usize) -> Word) -> Word {
    if j == i + 1 {
        return simple_f(n - i);
    }
    let a = g_root(i, j - 1, n, simple_f);
    let b = simple_f(n - (j - 1));
    b.mul(&a)
        .sub(&a.mul(&b).scale(&FieldElem::q().inv().expect("q is nonzero")))
}
