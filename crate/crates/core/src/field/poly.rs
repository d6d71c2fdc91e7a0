use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::var::Var;

/// A Laurent monomial: sorted `(variable, exponent)` pairs, no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    /// Builds from arbitrary pairs, merging repeats and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i32)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    fn merge(&self, other: &Monomial, sign: i32) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            match (a.get(i), b.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) if va == vb => {
                    let e = ea + sign * eb;
                    if e != 0 {
                        out.push((va, e));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(&(va, ea)), Some(&(vb, _))) if va < vb => {
                    out.push((va, ea));
                    i += 1;
                }
                (Some(&(va, ea)), None) => {
                    out.push((va, ea));
                    i += 1;
                }
                (_, Some(&(vb, eb))) => {
                    out.push((vb, sign * eb));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, 1)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.merge(other, -1)
    }

    pub fn pow(&self, e: i32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, x)| (v, x * e)).collect())
    }

    pub fn inverse(&self) -> Monomial {
        self.pow(-1)
    }

    /// Componentwise minimum, absent variables counting as exponent 0.
    pub fn min_exp(&self, other: &Monomial) -> Monomial {
        let vars: BTreeSet<Var> = self.0.iter().chain(&other.0).map(|&(v, _)| v).collect();
        Monomial::from_pairs(vars.into_iter().map(|v| (v, self.exponent(v).min(other.exponent(v)))))
    }

    pub fn max_exp(&self, other: &Monomial) -> Monomial {
        let vars: BTreeSet<Var> = self.0.iter().chain(&other.0).map(|&(v, _)| v).collect();
        Monomial::from_pairs(vars.into_iter().map(|v| (v, self.exponent(v).max(other.exponent(v)))))
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&(_, e)| e > 0)
    }

    /// `self | other` as ordinary monomials.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }
}

impl Ord for Monomial {
    /// Lexicographic order on exponent vectors in the fixed variable order.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, ea)), None) => return ea.cmp(&0),
                (None, Some(&(_, eb))) => return 0.cmp(&eb),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Laurent polynomial over Q: exponent vectors to nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        LaurentPoly::term(Monomial::one(), c)
    }

    pub fn from_int(c: i64) -> Self {
        LaurentPoly::constant(BigRational::from_integer(c.into()))
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        LaurentPoly::term(Monomial::var(v), BigRational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn as_constant(&self) -> Option<&BigRational> {
        match self.terms.len() {
            1 => self.terms.get(&Monomial::one()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.as_constant().is_some()
    }

    pub fn as_monomial(&self) -> Option<(&Monomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Leading term under the lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) != 0)
    }

    /// Componentwise minimum exponent over all terms (absent = 0).
    pub fn min_exponents(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        let mut acc = first.clone();
        for m in it {
            acc = acc.min_exp(m);
        }
        acc
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.pairs().iter().all(|&(_, e)| e >= 0))
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn degree_in(&self, v: Var) -> i32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Splits into coefficients of powers of `v`; coefficients are free of `v`.
    pub fn to_univariate(&self, v: Var) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let rest = m.div(&Monomial::var_pow(v, e));
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out
    }

    pub fn from_univariate(v: Var, coeffs: &BTreeMap<i32, LaurentPoly>) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e, c) in coeffs {
            for (m, x) in &c.terms {
                out.add_term(m.mul(&Monomial::var_pow(v, e)), x.clone());
            }
        }
        out
    }

    /// Exact quotient `self / d` of ordinary polynomials, `None` if `d` does not divide.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        let (dm, dc) = d.leading()?;
        if let Some((m, c)) = d.as_monomial() {
            let mut out = LaurentPoly::zero();
            for (k, x) in &self.terms {
                if !m.divides(k) {
                    return None;
                }
                out.add_term(k.div(m), x / c);
            }
            return Some(out);
        }
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            if !dm.divides(rm) {
                return None;
            }
            let tm = rm.div(dm);
            let tc = rc / dc;
            rem = &rem - &d.mul_monomial(&tm).scale(&tc);
            quot.add_term(tm, tc);
        }
        Some(quot)
    }

    /// Factor `c` such that `c * self` has coprime integer coefficients and a
    /// positive leading coefficient.
    pub fn primitive_factor(&self) -> BigRational {
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        if num_gcd.is_zero() {
            return BigRational::one();
        }
        let mut f = BigRational::new(den_lcm, num_gcd);
        if self.leading().is_some_and(|(_, c)| c.is_negative()) {
            f = -f;
        }
        f
    }

    pub fn primitive(&self) -> LaurentPoly {
        self.scale(&self.primitive_factor())
    }

    /// Evaluates with a variable valuation in any scalar type.
    pub fn evaluate<T: super::Scalar>(&self, value: &mut impl FnMut(Var) -> crate::Result<T>) -> crate::Result<T> {
        let mut cache: BTreeMap<Var, T> = BTreeMap::new();
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = T::from_rational(c);
            for &(v, e) in m.pairs() {
                let base = match cache.get(&v) {
                    Some(x) => x.clone(),
                    None => {
                        let x = value(v)?;
                        cache.insert(v, x.clone());
                        x
                    }
                };
                t = t.mul(&base.pow(e)?);
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (mut big, small) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn render_rational(c: &BigRational) -> String {
    fmt_rational(c)
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending monomial order, `*` between factors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut term = String::new();
            if m.is_one() {
                term.push_str(&fmt_rational(c));
            } else {
                if c.is_one() {
                } else if (-c).is_one() {
                    term.push('-');
                } else {
                    term.push_str(&fmt_rational(c));
                    term.push('*');
                }
                let factors: Vec<String> = m
                    .pairs()
                    .iter()
                    .map(|&(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
                    .collect();
                term.push_str(&factors.join("*"));
            }
            if idx > 0 && !term.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&term)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> LaurentPoly {
        LaurentPoly::var(Var::S)
    }

    #[test]
    fn lex_order_puts_higher_s_power_first() {
        let p = &(&s().pow(4) - &LaurentPoly::one()) + &LaurentPoly::var(Var::Mu(1));
        assert_eq!(p.to_string(), "s^4+mu1-1");
        let m = Monomial::from_pairs([(Var::S, -2)]);
        assert!(m < Monomial::one());
    }

    #[test]
    fn exact_division() {
        let a = &s().pow(4) - &LaurentPoly::one();
        let b = &s().pow(2) - &LaurentPoly::one();
        let q = a.div_exact(&b).unwrap();
        assert_eq!(q, &s().pow(2) + &LaurentPoly::one());
        assert!(b.div_exact(&(&s() + &LaurentPoly::from_int(2))).is_none());
    }

    #[test]
    fn min_exponents_counts_absent_as_zero() {
        let p =
            &s().pow(3) + &LaurentPoly::term(Monomial::from_pairs([(Var::S, 2), (Var::B(1), -1)]), BigRational::one());
        assert_eq!(p.min_exponents(), Monomial::from_pairs([(Var::S, 2), (Var::B(1), -1)]));
    }

    #[test]
    fn primitive_normalizes_sign_and_content() {
        let p = LaurentPoly::from_terms([
            (Monomial::var(Var::S), BigRational::new((-2).into(), 3.into())),
            (Monomial::one(), BigRational::new(4.into(), 9.into())),
        ]);
        assert_eq!(p.primitive().to_string(), "3*s-2");
    }
}
