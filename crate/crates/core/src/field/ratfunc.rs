use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::{Error, Result};

use super::gcd::poly_gcd;
use super::poly::{LaurentPoly, Monomial};
use super::scalar::Scalar;
use super::var::Var;

/// An exact rational function over Q in canonical form.
///
/// Canonical form: numerator and denominator are ordinary polynomials with
/// no common factor, and the denominator has coprime integer coefficients
/// with a positive leading coefficient. Equal elements therefore have
/// identical representations and identical [`canonical_string`]s.
///
/// [`canonical_string`]: Scalar::canonical_string
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElem {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl FieldElem {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return FieldElem {
                num,
                den: LaurentPoly::one(),
            };
        }
        let shift = num.min_exponents().min_exp(&den.min_exponents()).inverse();
        let (mut num, mut den) = if shift.is_one() {
            (num, den)
        } else {
            (num.mul_monomial(&shift), den.mul_monomial(&shift))
        };
        if num.len() > 1 && den.len() > 1 {
            let g = poly_gcd(&num, &den);
            if !g.is_constant() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        Self::scaled(num, den)
    }

    /// Fixes the scalar normalization of an already coprime pair.
    fn scaled(num: LaurentPoly, den: LaurentPoly) -> Self {
        let f = den.primitive_factor();
        if f.is_one() {
            FieldElem { num, den }
        } else {
            FieldElem {
                num: num.scale(&f),
                den: den.scale(&f),
            }
        }
    }

    /// `a / gcd(a, b)` and `b / gcd(a, b)`.
    fn cancel(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        if a.is_constant() || b.is_constant() {
            return (a.clone(), b.clone());
        }
        let g = poly_gcd(a, b);
        if g.is_constant() {
            return (a.clone(), b.clone());
        }
        (
            a.div_exact(&g).expect("gcd divides"),
            b.div_exact(&g).expect("gcd divides"),
        )
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::normalized(p, LaurentPoly::one())
    }

    pub fn var(v: Var) -> Self {
        FieldElem {
            num: LaurentPoly::var(v),
            den: LaurentPoly::one(),
        }
    }

    /// `c * m` for a Laurent monomial `m`.
    pub fn monomial(c: BigRational, m: &Monomial) -> Self {
        Self::normalized(LaurentPoly::term(m.clone(), c), LaurentPoly::one())
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::monomial(BigRational::one(), &Monomial::var_pow(v, e))
    }

    pub fn s() -> Self {
        FieldElem::var(Var::S)
    }

    /// `q = s^2`.
    pub fn q() -> Self {
        FieldElem::var_pow(Var::S, 2)
    }

    /// `omega = q - q^-1 = (s^4 - 1)/s^2`.
    pub fn omega() -> Self {
        Scalar::sub(&FieldElem::q(), &FieldElem::var_pow(Var::S, -2))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// Idempotent re-normalization.
    pub fn normalize(&self) -> Self {
        Self::normalized(self.num.clone(), self.den.clone())
    }

    /// `Some((c, m))` if this element equals `c * m` for a Laurent monomial `m`.
    pub fn as_monomial(&self) -> Option<(BigRational, Monomial)> {
        let (nm, nc) = self.num.as_monomial()?;
        let (dm, dc) = self.den.as_monomial()?;
        Some((nc / dc, nm.div(dm)))
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }

    /// Evaluates in another scalar type; errors on a vanishing denominator.
    pub fn evaluate<T: Scalar>(&self, value: &mut impl FnMut(Var) -> Result<T>) -> Result<T> {
        let n = self.num.evaluate(value)?;
        let d = self.den.evaluate(value)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        n.div(&d)
    }

    /// Replaces the listed variables by field elements; others are kept.
    pub fn compose(&self, map: &BTreeMap<Var, FieldElem>) -> Result<FieldElem> {
        self.evaluate(&mut |v| Ok(map.get(&v).cloned().unwrap_or_else(|| FieldElem::var(v))))
    }
}

impl Scalar for FieldElem {
    fn zero() -> Self {
        FieldElem {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    fn one() -> Self {
        FieldElem {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    fn from_rational(c: &BigRational) -> Self {
        FieldElem {
            num: LaurentPoly::constant(c.clone()),
            den: LaurentPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalized(&self.num + &other.num, self.den.clone());
        }
        // both operands are reduced, so only gcd(d1, d2) can survive
        let g = poly_gcd(&self.den, &other.den);
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = other.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d2) + &(&other.num * &d1);
        if num.is_zero() {
            return Self::zero();
        }
        let (num, g) = Self::cancel(&num, &g);
        Self::scaled(num, &(&d1 * &d2) * &g)
    }

    fn sub(&self, other: &Self) -> Self {
        Scalar::add(self, &Scalar::neg(other))
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return FieldElem {
                num: &self.num * &other.num,
                den: LaurentPoly::one(),
            };
        }
        let (n1, d2) = Self::cancel(&self.num, &other.den);
        let (n2, d1) = Self::cancel(&other.num, &self.den);
        Self::scaled(&n1 * &n2, &d1 * &d2)
    }

    fn neg(&self) -> Self {
        FieldElem {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    fn canonical_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for FieldElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_field_elem(s)
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        <FieldElem as Scalar>::from_int(n)
    }
}

impl From<Var> for FieldElem {
    fn from(v: Var) -> Self {
        FieldElem::var(v)
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        Scalar::add(self, rhs)
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        Scalar::sub(self, rhs)
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        Scalar::mul(self, rhs)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        Scalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> FieldElem {
        FieldElem::s()
    }
    fn int(n: i64) -> FieldElem {
        FieldElem::from(n)
    }

    #[test]
    fn omega_renders_over_s_squared() {
        assert_eq!(FieldElem::omega().to_string(), "(s^4-1)/(s^2)");
        let w = &FieldElem::q() - &FieldElem::var_pow(Var::S, -2);
        assert_eq!(w, FieldElem::omega());
    }

    #[test]
    fn cancels_common_factor() {
        let q = FieldElem::q();
        let x = (&(&q * &q) - &int(1)).div(&(&q - &int(1))).unwrap();
        assert_eq!(x.to_string(), "s^2+1");
    }

    #[test]
    fn canonical_scalar_and_sign() {
        let a = FieldElem::new(
            LaurentPoly::from_int(3),
            &LaurentPoly::from_int(-6) * &LaurentPoly::var(Var::S),
        )
        .unwrap();
        assert_eq!(a.to_string(), "(-1/2)/(s)");
        let b = FieldElem::new(LaurentPoly::var(Var::Mu(1)), LaurentPoly::from_int(4)).unwrap();
        assert_eq!(b.to_string(), "1/4*mu1");
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(s().div(&int(0)), Err(Error::DivisionByZero));
        assert!(FieldElem::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn compose_substitutes_symbolically() {
        let x = &FieldElem::var(Var::P) * &FieldElem::var(Var::Nu);
        let mut map = BTreeMap::new();
        map.insert(Var::P, FieldElem::var_pow(Var::S, -2));
        map.insert(Var::Nu, &FieldElem::var(Var::Mu(1)) * &FieldElem::q());
        assert_eq!(x.compose(&map).unwrap(), FieldElem::var(Var::Mu(1)));
    }

    #[test]
    fn monomial_detection() {
        let x = &FieldElem::var_pow(Var::B(1), -2) * &FieldElem::var_pow(Var::S, 3);
        let (c, m) = x.as_monomial().unwrap();
        assert!(c.is_one());
        assert_eq!(m, Monomial::from_pairs([(Var::S, 3), (Var::B(1), -2)]));
        assert!(FieldElem::omega().as_monomial().is_none());
    }
}
