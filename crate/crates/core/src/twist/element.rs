use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{parse_rational, FieldElem, Rational, Scalar, Valuation, Var};
use crate::linalg::{digits, SparseMat};
use crate::qgroup::{Rep, Word};

type Mat<V> = SparseMat<<V as Valuation>::Elem>;

/// A diagonal Cartan element `sum_i diag[i] e_ii + central C`, with `C` the
/// central element acting as 1 on each leg.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanVec {
    pub diag: Vec<i32>,
    pub central: i32,
}

impl CartanVec {
    pub fn zero(n: usize) -> Self {
        CartanVec {
            diag: vec![0; n],
            central: 0,
        }
    }

    /// `sum_{i in indices} e_ii`, 1-based.
    pub fn sum_of(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zero(n);
        for i in indices {
            v.diag[i - 1] += 1;
        }
        v
    }

    pub fn central(n: usize) -> Self {
        CartanVec {
            diag: vec![0; n],
            central: 1,
        }
    }

    /// Eigenvalue of the coproduct image on a group of legs carrying the
    /// given basis digits.
    pub fn eigenvalue(&self, legs: &[usize]) -> i64 {
        legs.iter().map(|&i| self.diag[i] as i64).sum::<i64>() + self.central as i64 * legs.len() as i64
    }

    fn to_json_value(&self) -> Value {
        json!({ "diag": self.diag, "central": self.central })
    }

    fn from_json_value(v: &Value) -> Result<Self> {
        let bad = || Error::Invalid("cartan vector JSON".into());
        let diag = v
            .get("diag")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(|x| x.as_i64().map(|x| x as i32).ok_or_else(bad))
            .collect::<Result<Vec<i32>>>()?;
        let central = v.get("central").and_then(Value::as_i64).ok_or_else(bad)? as i32;
        Ok(CartanVec { diag, central })
    }
}

/// `q^(coeff · left ⊗ right)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QTerm {
    pub coeff: Rational,
    pub left: CartanVec,
    pub right: CartanVec,
}

/// `var^(power · left ⊗ right)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamTerm {
    pub var: Var,
    pub power: i32,
    pub left: CartanVec,
    pub right: CartanVec,
}

/// Exponential of a bilinear Cartan element; diagonal in every
/// representation.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CartanExp {
    pub q_terms: Vec<QTerm>,
    pub param_terms: Vec<ParamTerm>,
}

/// `exp_base(coeff · left ⊗ right)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QExpFactor {
    pub coeff: FieldElem,
    pub left: Word,
    pub right: Word,
    pub base: FieldElem,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TwistFactor {
    Cartan(CartanExp),
    QExp(QExpFactor),
}

/// An ordered product of factors in `U ⊗ U` for `U = U_q(gl(n))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistElement {
    n: usize,
    factors: Vec<TwistFactor>,
}

impl TwistElement {
    pub fn new(n: usize, factors: Vec<TwistFactor>) -> Self {
        TwistElement { n, factors }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[TwistFactor] {
        &self.factors
    }

    /// Product `self · other`.
    pub fn then(&self, other: &TwistElement) -> Result<TwistElement> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "composing gl({}) and gl({}) elements",
                self.n, other.n
            )));
        }
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Ok(Self::new(self.n, factors))
    }

    /// Left-to-right product of the list.
    pub fn compose(parts: &[TwistElement]) -> Result<TwistElement> {
        let first = parts
            .first()
            .ok_or_else(|| Error::Invalid("nothing to compose".into()))?;
        parts[1..].iter().try_fold(first.clone(), |acc, p| acc.then(p))
    }

    /// Image on `V^{⊗(m1+m2)}` of `(Δ^(m1) ⊗ Δ^(m2))(F)`: the first tensor
    /// factor is pushed onto `m1` legs and the second onto the next `m2`.
    /// `(1, 1)` is the plain image; `(2, 1)` is `(Δ ⊗ id)F`; a zero count
    /// applies the counit on that side.
    pub fn eval_split<V: Valuation>(&self, rep: &Rep<V>, m1: usize, m2: usize) -> Result<Mat<V>> {
        self.check_rep(rep)?;
        let dim = self.n.pow((m1 + m2) as u32);
        let mut out = SparseMat::identity(dim);
        for f in &self.factors {
            out = out.mul(&factor_image(rep, f, m1, m2, false)?)?;
        }
        Ok(out)
    }

    /// Inverse of [`eval_split`](Self::eval_split), computed factor by factor:
    /// `exp_b(x)^-1 = exp_(1/b)(-x)` and Cartan exponentials invert entrywise.
    pub fn eval_inverse_split<V: Valuation>(&self, rep: &Rep<V>, m1: usize, m2: usize) -> Result<Mat<V>> {
        self.check_rep(rep)?;
        let dim = self.n.pow((m1 + m2) as u32);
        let mut out = SparseMat::identity(dim);
        for f in self.factors.iter().rev() {
            out = out.mul(&factor_image(rep, f, m1, m2, true)?)?;
        }
        Ok(out)
    }

    pub fn eval<V: Valuation>(&self, rep: &Rep<V>) -> Result<Mat<V>> {
        self.eval_split(rep, 1, 1)
    }

    pub fn eval_inverse<V: Valuation>(&self, rep: &Rep<V>) -> Result<Mat<V>> {
        self.eval_inverse_split(rep, 1, 1)
    }

    fn check_rep<V: Valuation>(&self, rep: &Rep<V>) -> Result<()> {
        if rep.n() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "gl({}) element evaluated on gl({})",
                self.n,
                rep.n()
            )));
        }
        Ok(())
    }

    pub fn to_json_value(&self) -> Value {
        let factors: Vec<Value> = self.factors.iter().map(factor_to_json).collect();
        json!({ "n": self.n, "factors": factors })
    }

    pub fn to_json_string(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Invalid(format!("twist JSON: {m}"));
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing n"))? as usize;
        let factors = v
            .get("factors")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing factors"))?
            .iter()
            .map(factor_from_json)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(n, factors))
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Invalid(format!("twist JSON: {e}")))?;
        Self::from_json_value(&v)
    }
}

fn factor_image<V: Valuation>(rep: &Rep<V>, f: &TwistFactor, m1: usize, m2: usize, invert: bool) -> Result<Mat<V>> {
    match f {
        TwistFactor::Cartan(c) => {
            let d = cartan_image(rep, c, m1, m2)?;
            if invert {
                d.diag_inverse()
            } else {
                Ok(d)
            }
        }
        TwistFactor::QExp(x) => {
            let left = rep.coproduct_image(&x.left, m1)?;
            let right = rep.coproduct_image(&x.right, m2)?;
            let arg = left.kron(&right);
            let mut coeff = rep.lift(&x.coeff)?;
            let mut base = rep.lift(&x.base)?;
            if invert {
                coeff = coeff.neg();
                base = base.inv()?;
            }
            SparseMat::qexp_nilpotent(&coeff, &arg, &base)
        }
    }
}

fn cartan_image<V: Valuation>(rep: &Rep<V>, c: &CartanExp, m1: usize, m2: usize) -> Result<Mat<V>> {
    let n = rep.n();
    let k = m1 + m2;
    let params: Vec<V::Elem> = c
        .param_terms
        .iter()
        .map(|t| rep.val().var(t.var))
        .collect::<Result<_>>()?;
    let dim = n.pow(k as u32);
    let mut values = Vec::with_capacity(dim);
    for r in 0..dim {
        let d = digits(r, n, k);
        let (l, rr) = d.split_at(m1);
        let mut s_exp = <Rational as Zero>::zero();
        for t in &c.q_terms {
            let e = t.left.eigenvalue(l) * t.right.eigenvalue(rr);
            s_exp += &t.coeff * Rational::from_integer((2 * e).into());
        }
        if !s_exp.is_integer() {
            return Err(Error::FractionalExponent(format!("s^({s_exp})")));
        }
        let s_exp = s_exp
            .to_integer()
            .to_i32()
            .ok_or_else(|| Error::FractionalExponent("exponent overflow".into()))?;
        let mut v = rep.s_pow(s_exp)?;
        for (t, p) in c.param_terms.iter().zip(&params) {
            let e = t.power as i64 * t.left.eigenvalue(l) * t.right.eigenvalue(rr);
            if e != 0 {
                v = v.mul(&p.pow(e as i32)?);
            }
        }
        values.push(v);
    }
    Ok(SparseMat::diag(values))
}

fn factor_to_json(f: &TwistFactor) -> Value {
    match f {
        TwistFactor::Cartan(c) => {
            let q: Vec<Value> = c
                .q_terms
                .iter()
                .map(|t| {
                    json!({
                        "coeff": t.coeff.canonical_string(),
                        "left": t.left.to_json_value(),
                        "right": t.right.to_json_value(),
                    })
                })
                .collect();
            let p: Vec<Value> = c
                .param_terms
                .iter()
                .map(|t| {
                    json!({
                        "var": t.var.to_string(),
                        "power": t.power,
                        "left": t.left.to_json_value(),
                        "right": t.right.to_json_value(),
                    })
                })
                .collect();
            json!({ "kind": "cartan", "q_terms": q, "param_terms": p })
        }
        TwistFactor::QExp(x) => json!({
            "kind": "qexp",
            "coeff": x.coeff.canonical_string(),
            "left": x.left.to_json_value(),
            "right": x.right.to_json_value(),
            "base": x.base.canonical_string(),
        }),
    }
}

fn factor_from_json(v: &Value) -> Result<TwistFactor> {
    let bad = |m: &str| Error::Invalid(format!("twist factor JSON: {m}"));
    let field = |key: &str| v.get(key).ok_or_else(|| bad(&format!("missing {key}")));
    let string = |key: &str| -> Result<&str> { field(key)?.as_str().ok_or_else(|| bad(key)) };
    match string("kind")? {
        "cartan" => {
            let list = |key: &str| -> Result<&Vec<Value>> { field(key)?.as_array().ok_or_else(|| bad(key)) };
            let side = |t: &Value, key: &str| CartanVec::from_json_value(t.get(key).ok_or_else(|| bad(key))?);
            let q_terms = list("q_terms")?
                .iter()
                .map(|t| {
                    Ok(QTerm {
                        coeff: parse_rational(t.get("coeff").and_then(Value::as_str).ok_or_else(|| bad("coeff"))?)?,
                        left: side(t, "left")?,
                        right: side(t, "right")?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let param_terms = list("param_terms")?
                .iter()
                .map(|t| {
                    Ok(ParamTerm {
                        var: t
                            .get("var")
                            .and_then(Value::as_str)
                            .ok_or_else(|| bad("var"))?
                            .parse()?,
                        power: t.get("power").and_then(Value::as_i64).ok_or_else(|| bad("power"))? as i32,
                        left: side(t, "left")?,
                        right: side(t, "right")?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(TwistFactor::Cartan(CartanExp { q_terms, param_terms }))
        }
        "qexp" => Ok(TwistFactor::QExp(QExpFactor {
            coeff: string("coeff")?.parse()?,
            left: Word::from_json_value(field("left")?)?,
            right: Word::from_json_value(field("right")?)?,
            base: string("base")?.parse()?,
        })),
        other => Err(bad(&format!("unknown kind {other:?}"))),
    }
}

/// `1/2` as a q-exponent coefficient.
pub(crate) fn half() -> Rational {
    Rational::new(One::one(), 2.into())
}
