//! Tensor-power bookkeeping on `V^{⊗k}` with `dim V = n`.
//!
//! Basis vector `v_{i1} ⊗ ... ⊗ v_{ik}` has the row-major index
//! `sum_j i_j n^(k-1-j)` (0-based digits).

use crate::error::{Error, Result};
use crate::field::Scalar;

use super::sparse::SparseMat;

/// Digits of `index` in base `n`, most significant (leg 1) first.
pub fn digits(mut index: usize, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    out
}

pub fn from_digits(digits: &[usize], n: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * n + d)
}

/// Number of legs `k` with `n^k = dim`.
pub fn legs_of(dim: usize, n: usize) -> Result<usize> {
    let mut k = 0;
    let mut d = 1;
    while d < dim {
        d *= n;
        k += 1;
    }
    if d != dim || n < 2 {
        return Err(Error::DimensionMismatch(format!(
            "dimension {dim} is not a power of {n}"
        )));
    }
    Ok(k)
}

impl<T: Scalar> SparseMat<T> {
    pub fn kron(&self, other: &Self) -> Self {
        let db = other.dim();
        let mut out = SparseMat::zeros(self.dim() * db);
        for (ra, ca, a) in self.entries() {
            for (rb, cb, b) in other.entries() {
                out.set(ra * db + rb, ca * db + cb, a.mul(b));
            }
        }
        out
    }

    /// `P M P` with `P` the flip of `V ⊗ V`.
    pub fn flip_conjugate(&self, n: usize) -> Result<Self> {
        if n * n != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "flip needs dimension {}, got {}",
                n * n,
                self.dim()
            )));
        }
        let p = |i: usize| (i % n) * n + i / n;
        let mut out = SparseMat::zeros(self.dim());
        for (r, c, v) in self.entries() {
            out.set(p(r), p(c), v.clone());
        }
        Ok(out)
    }

    /// Places an operator on `legs.len()` tensor factors at the given
    /// (0-based, distinct) positions of `V^{⊗k}`, identity elsewhere. The
    /// j-th factor of `self` acts on leg `legs[j]`, so unsorted legs also
    /// permute.
    pub fn embed_legs(&self, legs: &[usize], k: usize, n: usize) -> Result<Self> {
        let m = legs.len();
        if legs_of(self.dim(), n)? != m {
            return Err(Error::DimensionMismatch(format!(
                "operator on {} legs placed on {m}",
                legs_of(self.dim(), n)?
            )));
        }
        let mut seen = vec![false; k];
        for &l in legs {
            if l >= k || seen[l] {
                return Err(Error::LegOutOfRange(format!("legs {legs:?} of {k}")));
            }
            seen[l] = true;
        }
        let rest: Vec<usize> = (0..k).filter(|l| !seen[*l]).collect();
        let spectators = n.pow(rest.len() as u32);
        let mut out = SparseMat::zeros(n.pow(k as u32));
        let mut row = vec![0; k];
        let mut col = vec![0; k];
        for (r, c, v) in self.entries() {
            let rd = digits(r, n, m);
            let cd = digits(c, n, m);
            for (j, &l) in legs.iter().enumerate() {
                row[l] = rd[j];
                col[l] = cd[j];
            }
            for s in 0..spectators {
                let sd = digits(s, n, rest.len());
                for (j, &l) in rest.iter().enumerate() {
                    row[l] = sd[j];
                    col[l] = sd[j];
                }
                out.set(from_digits(&row, n), from_digits(&col, n), v.clone());
            }
        }
        Ok(out)
    }

    /// Two-leg embedding with 1-based legs `(i, j)`, `i != j`; the first
    /// factor lands on leg `i`.
    pub fn leg_embed(&self, legs: (usize, usize), k: usize, n: usize) -> Result<Self> {
        let (i, j) = legs;
        if i == 0 || j == 0 || i > k || j > k || i == j {
            return Err(Error::LegOutOfRange(format!("({i}, {j}) of {k}")));
        }
        self.embed_legs(&[i - 1, j - 1], k, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn unit(n: usize, i: usize, j: usize) -> SparseMat<Rational> {
        SparseMat::unit(n, i - 1, j - 1)
    }

    #[test]
    fn kron_basis_convention() {
        let m = unit(2, 1, 1).kron(&unit(2, 2, 2));
        assert_eq!(
            m.entries().map(|(r, c, _)| (r + 1, c + 1)).collect::<Vec<_>>(),
            vec![(2, 2)]
        );
        let m = unit(2, 1, 2).kron(&unit(2, 2, 1));
        assert_eq!(
            m.entries().map(|(r, c, _)| (r + 1, c + 1)).collect::<Vec<_>>(),
            vec![(2, 3)]
        );
        let i = SparseMat::<Rational>::identity(3);
        assert!(i.kron(&i).is_identity());
    }

    #[test]
    fn flip_swaps_factors() {
        let a = SparseMat::from_entries(3, [(0, 1, r(2)), (2, 2, r(5))]).unwrap();
        let b = SparseMat::from_entries(3, [(1, 0, r(7)), (0, 0, r(-1))]).unwrap();
        assert_eq!(a.kron(&b).flip_conjugate(3).unwrap(), b.kron(&a));
        let ab = a.kron(&b);
        assert_eq!(ab.flip_conjugate(3).unwrap().flip_conjugate(3).unwrap(), ab);
        assert!(a.flip_conjugate(2).is_err());
    }

    #[test]
    fn leg_embeddings() {
        let n = 2;
        let a = SparseMat::from_entries(2, [(0, 1, r(3))]).unwrap();
        let b = SparseMat::from_entries(2, [(1, 1, r(2)), (1, 0, r(1))]).unwrap();
        let i = SparseMat::<Rational>::identity(2);
        let m = a.kron(&b);
        assert_eq!(m.leg_embed((1, 2), 3, n).unwrap(), m.kron(&i));
        assert_eq!(m.leg_embed((2, 3), 3, n).unwrap(), i.kron(&m));
        assert_eq!(m.leg_embed((1, 3), 3, n).unwrap(), a.kron(&i).kron(&b));
        assert_eq!(m.leg_embed((2, 1), 2, n).unwrap(), m.flip_conjugate(2).unwrap());
        assert!(m.leg_embed((0, 1), 3, n).is_err());
        assert!(m.leg_embed((1, 4), 3, n).is_err());
    }

    #[test]
    fn digit_round_trip() {
        for i in 0..27 {
            assert_eq!(from_digits(&digits(i, 3, 3), 3), i);
        }
        assert_eq!(digits(5, 3, 2), vec![1, 2]);
        assert_eq!(legs_of(27, 3).unwrap(), 3);
        assert!(legs_of(10, 3).is_err());
    }
}
