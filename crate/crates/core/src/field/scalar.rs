use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::poly::render_rational;

/// An exact field element usable as a matrix entry.
///
/// Implemented by [`BigRational`] (numeric-rational mode) and
/// [`FieldElem`](super::FieldElem) (symbolic mode).
pub trait Scalar: Clone + PartialEq + Eq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(c: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn canonical_string(&self) -> String;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b);
            }
            n >>= 1;
            if n > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc)
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(c: &BigRational) -> Self {
        c.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn canonical_string(&self) -> String {
        render_rational(self)
    }
}

/// The q-number `[n; base] = (base^n - 1)/(base - 1) = 1 + base + ... + base^(n-1)`.
pub fn q_int<T: Scalar>(n: u32, base: &T) -> Result<T> {
    if base.is_one() {
        return Err(Error::DegenerateQNumber);
    }
    let mut acc = T::zero();
    let mut p = T::one();
    for _ in 0..n {
        acc = acc.add(&p);
        p = p.mul(base);
    }
    Ok(acc)
}

/// `[n; base]! = [1; base] [2; base] ... [n; base]`, with `[0; base]! = 1`.
pub fn q_factorial<T: Scalar>(n: u32, base: &T) -> Result<T> {
    if base.is_one() {
        return Err(Error::DegenerateQNumber);
    }
    let mut acc = T::one();
    for k in 1..=n {
        acc = acc.mul(&q_int(k, base)?);
    }
    Ok(acc)
}
