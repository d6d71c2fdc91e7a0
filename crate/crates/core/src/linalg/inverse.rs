use crate::error::{Error, Result};
use crate::field::Scalar;

use super::sparse::SparseMat;

impl<T: Scalar> SparseMat<T> {
    /// Exact inverse by fraction-free (Bareiss) elimination on `[M | I]`
    /// followed by back substitution.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_diagonal() {
            return self.diag_inverse();
        }
        let n = self.dim();
        let w = 2 * n;
        let mut a: Vec<Vec<T>> = (0..n)
            .map(|r| {
                let mut row = vec![T::zero(); w];
                for (&c, v) in self.row(r) {
                    row[c] = v.clone();
                }
                row[n + r] = T::one();
                row
            })
            .collect();

        let mut prev = T::one();
        for k in 0..n {
            let p = (k..n).find(|&r| !a[r][k].is_zero()).ok_or(Error::Singular)?;
            a.swap(k, p);
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            let pivot = &pivot_row[k];
            for row in bottom.iter_mut() {
                let lead = row[k].clone();
                for j in (k + 1)..w {
                    let x = &row[j];
                    let y = &pivot_row[j];
                    let left_zero = x.is_zero();
                    let right_zero = lead.is_zero() || y.is_zero();
                    row[j] = match (left_zero, right_zero) {
                        (true, true) => continue,
                        (false, true) => pivot.mul(x),
                        (true, false) => lead.mul(y).neg(),
                        (false, false) => pivot.mul(x).sub(&lead.mul(y)),
                    }
                    .div(&prev)?;
                }
                row[k] = T::zero();
            }
            prev = pivot.clone();
        }

        let mut out = SparseMat::zeros(n);
        let mut solved: Vec<Vec<T>> = vec![Vec::new(); n];
        for i in (0..n).rev() {
            let inv_pivot = a[i][i].inv()?;
            let mut x: Vec<T> = a[i][n..].to_vec();
            for j in (i + 1)..n {
                if a[i][j].is_zero() {
                    continue;
                }
                for (xc, sj) in x.iter_mut().zip(&solved[j]) {
                    if !sj.is_zero() {
                        *xc = xc.sub(&a[i][j].mul(sj));
                    }
                }
            }
            for xc in x.iter_mut() {
                if !xc.is_zero() {
                    *xc = xc.mul(&inv_pivot);
                }
            }
            for (c, v) in x.iter().enumerate() {
                out.set(i, c, v.clone());
            }
            solved[i] = x;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldElem, Rational, Var};

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn diagonal_and_unipotent() {
        let d = SparseMat::diag(vec![r(2), r(-3)]);
        assert_eq!(
            d.inverse().unwrap(),
            SparseMat::diag(vec![
                Rational::new(1.into(), 2.into()),
                Rational::new((-1).into(), 3.into())
            ])
        );
        let c = FieldElem::var(Var::Mu(1));
        let u = SparseMat::<FieldElem>::identity(2)
            .add(&SparseMat::unit(2, 0, 1).scale(&c))
            .unwrap();
        let expect = SparseMat::identity(2).sub(&SparseMat::unit(2, 0, 1).scale(&c)).unwrap();
        assert_eq!(u.inverse().unwrap(), expect);
    }

    #[test]
    fn needs_pivoting() {
        let m = SparseMat::from_entries(3, [(0, 1, r(1)), (1, 0, r(1)), (2, 2, r(4)), (0, 2, r(3))]).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());
    }

    #[test]
    fn singular_is_reported() {
        let m = SparseMat::from_entries(2, [(0, 0, r(1)), (0, 1, r(2)), (1, 0, r(2)), (1, 1, r(4))]).unwrap();
        assert_eq!(m.inverse(), Err(Error::Singular));
    }
}
