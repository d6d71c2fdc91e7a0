use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{q_factorial, Scalar};

/// Rows above this count are multiplied in parallel.
const PAR_ROWS: usize = 64;

/// Square sparse matrix with exact entries. Indices are 0-based; no zero is
/// ever stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMat<T> {
    dim: usize,
    rows: Vec<BTreeMap<usize, T>>,
}

/// First entry where two matrices disagree, as rendered strings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Difference {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

impl<T: Scalar> SparseMat<T> {
    pub fn zeros(dim: usize) -> Self {
        SparseMat {
            dim,
            rows: vec![BTreeMap::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diag((0..dim).map(|_| T::one()).collect())
    }

    pub fn diag(values: Vec<T>) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    /// The matrix unit with a single 1 at `(row, col)`.
    pub fn unit(dim: usize, row: usize, col: usize) -> Self {
        let mut m = Self::zeros(dim);
        m.set(row, col, T::one());
        m
    }

    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, T)>) -> Result<Self> {
        let mut m = Self::zeros(dim);
        for (r, c, v) in entries {
            if r >= dim || c >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "entry ({r}, {c}) outside a {dim}x{dim} matrix"
                )));
            }
            m.add_to(r, c, &v);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&T> {
        self.rows[row].get(&col)
    }

    /// Entry value, zero when absent.
    pub fn at(&self, row: usize, col: usize) -> T {
        self.get(row, col).cloned().unwrap_or_else(T::zero)
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        if value.is_zero() {
            self.rows[row].remove(&col);
        } else {
            self.rows[row].insert(col, value);
        }
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: &T) {
        if value.is_zero() {
            return;
        }
        let slot = &mut self.rows[row];
        match slot.get_mut(&col) {
            Some(x) => {
                let sum = x.add(value);
                if sum.is_zero() {
                    slot.remove(&col);
                } else {
                    *x = sum;
                }
            }
            None => {
                slot.insert(col, value.clone());
            }
        }
    }

    pub fn row(&self, row: usize) -> &BTreeMap<usize, T> {
        &self.rows[row]
    }

    /// Entries in (row, col) order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(&c, v)| (r, c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(r, c, _)| r == c)
    }

    pub fn is_identity(&self) -> bool {
        self.nnz() == self.dim && self.entries().all(|(r, c, v)| r == c && v.is_one())
    }

    pub fn is_strictly_upper(&self) -> bool {
        self.entries().all(|(r, c, _)| r < c)
    }

    pub fn is_strictly_lower(&self) -> bool {
        self.entries().all(|(r, c, _)| r > c)
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.dim, other.dim)));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let row_times = |row: &BTreeMap<usize, T>| {
            let mut acc: BTreeMap<usize, T> = BTreeMap::new();
            for (k, a) in row {
                for (c, b) in &other.rows[*k] {
                    let p = a.mul(b);
                    match acc.get_mut(c) {
                        Some(x) => *x = x.add(&p),
                        None => {
                            acc.insert(*c, p);
                        }
                    }
                }
            }
            acc.retain(|_, v| !v.is_zero());
            acc
        };
        let rows = if self.dim >= PAR_ROWS {
            self.rows.par_iter().map(row_times).collect()
        } else {
            self.rows.iter().map(row_times).collect()
        };
        Ok(SparseMat { dim: self.dim, rows })
    }

    /// Product of a non-empty sequence, left to right.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Result<Self> {
        let mut it = factors.into_iter();
        let first = it.next().ok_or_else(|| Error::Invalid("empty matrix product".into()))?;
        it.try_fold(first.clone(), |acc, m| acc.mul(m))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_to(r, c, v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_entries(|v| v.neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zeros(self.dim);
        }
        self.map_entries(|v| v.mul(c))
    }

    fn map_entries(&self, f: impl Fn(&T) -> T) -> Self {
        let mut out = Self::zeros(self.dim);
        for (r, c, v) in self.entries() {
            out.set(r, c, f(v));
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for (r, c, v) in self.entries() {
            out.rows[c].insert(r, v.clone());
        }
        out
    }

    /// `A B - B A`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::identity(self.dim);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Entry-wise conversion into another scalar type.
    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> Result<U>) -> Result<SparseMat<U>> {
        let mut out = SparseMat::zeros(self.dim);
        for (r, c, v) in self.entries() {
            out.set(r, c, f(v)?);
        }
        Ok(out)
    }

    /// Inverse of a diagonal matrix with no zero on the diagonal.
    pub fn diag_inverse(&self) -> Result<Self> {
        if !self.is_diagonal() || self.nnz() != self.dim {
            return Err(Error::Singular);
        }
        let mut out = Self::zeros(self.dim);
        for (r, _, v) in self.entries() {
            out.set(r, r, v.inv()?);
        }
        Ok(out)
    }

    /// `sum_k (c M)^k / [k; base]!`, stopping at the first vanishing power.
    ///
    /// Fails with [`Error::NotNilpotent`] if `(c M)^(dim+1)` is nonzero.
    pub fn qexp_nilpotent(c: &T, m: &Self, base: &T) -> Result<Self> {
        let x = m.scale(c);
        let mut out = Self::identity(m.dim);
        let mut power = Self::identity(m.dim);
        for k in 1..=(m.dim as u32 + 1) {
            power = power.mul(&x)?;
            if power.is_zero() {
                return Ok(out);
            }
            if k == m.dim as u32 + 1 {
                break;
            }
            let term = if k == 1 {
                power.clone()
            } else {
                power.scale(&q_factorial(k, base)?.inv()?)
            };
            out = out.add(&term)?;
        }
        Err(Error::NotNilpotent(m.dim))
    }

    /// First (row, col) in row-major order where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<Difference> {
        if self.dim != other.dim {
            return Some(Difference {
                row: 0,
                col: 0,
                lhs: format!("dim {}", self.dim),
                rhs: format!("dim {}", other.dim),
            });
        }
        for r in 0..self.dim {
            let (a, b) = (&self.rows[r], &other.rows[r]);
            if a == b {
                continue;
            }
            let mut cols: Vec<usize> = a.keys().chain(b.keys()).copied().collect();
            cols.sort_unstable();
            cols.dedup();
            for c in cols {
                if a.get(&c) != b.get(&c) {
                    let show = |x: Option<&T>| x.map_or_else(|| "0".to_string(), Scalar::canonical_string);
                    return Some(Difference {
                        row: r,
                        col: c,
                        lhs: show(a.get(&c)),
                        rhs: show(b.get(&c)),
                    });
                }
            }
        }
        None
    }
}
