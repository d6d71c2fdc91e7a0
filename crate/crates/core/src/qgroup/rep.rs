use crate::error::{Error, Result};
use crate::field::{FieldElem, Scalar, Valuation, Var};
use crate::linalg::{digits, SparseMat};

use super::roots::RootDatum;
use super::word::{Atom, Word};

type Mat<V> = SparseMat<<V as Valuation>::Elem>;

/// The fundamental representation of `U_q(gl(n))` with entries produced by a
/// [`Valuation`], plus the coproduct engine on words.
///
/// `Δ(e_i) = e_i ⊗ K_i + 1 ⊗ e_i`, `Δ(f_i) = f_i ⊗ 1 + K_i^-1 ⊗ f_i` with
/// `K_i = q^(h_i)`, and diagonal group-likes are group-like.
#[derive(Clone, Debug)]
pub struct Rep<V: Valuation> {
    n: usize,
    val: V,
    s: V::Elem,
    e: Vec<Mat<V>>,
    f: Vec<Mat<V>>,
}

impl<V: Valuation> Rep<V> {
    pub fn new(n: usize, val: V) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid(format!("gl({n}) has no root generators")));
        }
        let s = val.var(Var::S)?;
        let e = (0..n - 1).map(|i| SparseMat::unit(n, i, i + 1)).collect();
        let f = (0..n - 1).map(|i| SparseMat::unit(n, i + 1, i)).collect();
        Ok(Rep { n, val, s, e, f })
    }

    pub fn fundamental(datum: &RootDatum, val: V) -> Result<Self> {
        Self::new(datum.n(), val)
    }

    /// Replaces the image of `e_i` (used to build corrupted controls).
    pub fn with_e(mut self, i: usize, m: Mat<V>) -> Self {
        self.e[i - 1] = m;
        self
    }

    pub fn with_f(mut self, i: usize, m: Mat<V>) -> Self {
        self.f[i - 1] = m;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn val(&self) -> &V {
        &self.val
    }

    pub fn lift(&self, x: &FieldElem) -> Result<V::Elem> {
        self.val.lift(x)
    }

    pub fn s_pow(&self, e: i32) -> Result<V::Elem> {
        self.s.pow(e)
    }

    pub fn q(&self) -> Result<V::Elem> {
        self.s_pow(2)
    }

    pub fn omega(&self) -> Result<V::Elem> {
        Ok(self.s_pow(2)?.sub(&self.s_pow(-2)?))
    }

    /// Matrix unit `e_ij`, 1-based.
    pub fn unit(&self, i: usize, j: usize) -> Mat<V> {
        SparseMat::unit(self.n, i - 1, j - 1)
    }

    pub fn e(&self, i: usize) -> &Mat<V> {
        &self.e[i - 1]
    }

    pub fn f(&self, i: usize) -> &Mat<V> {
        &self.f[i - 1]
    }

    /// Exponent vector of `h_i = e_ii - e_(i+1,i+1)`.
    pub fn h_vec(&self, i: usize) -> Vec<i32> {
        let mut h = vec![0; self.n];
        h[i - 1] = 1;
        h[i] = -1;
        h
    }

    pub fn h(&self, i: usize) -> Mat<V> {
        SparseMat::diag(self.h_vec(i).into_iter().map(|x| V::Elem::from_int(x.into())).collect())
    }

    /// `s^(sum_i d_i e_ii)`.
    pub fn group(&self, d: &[i32]) -> Result<Mat<V>> {
        self.group_on(d, 1)
    }

    /// `K_i^±1 = q^(±h_i)`.
    pub fn k(&self, i: usize, sign: i32) -> Result<Mat<V>> {
        let d: Vec<i32> = self.h_vec(i).into_iter().map(|x| 2 * sign * x).collect();
        self.group(&d)
    }

    /// `Δ^(m)` of a group-like on `m` legs.
    fn group_on(&self, d: &[i32], m: usize) -> Result<Mat<V>> {
        if d.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "group-like with {} exponents on gl({})",
                d.len(),
                self.n
            )));
        }
        let dim = self.n.pow(m as u32);
        let mut values = Vec::with_capacity(dim);
        for r in 0..dim {
            let e: i32 = digits(r, self.n, m).into_iter().map(|i| d[i]).sum();
            values.push(self.s_pow(e)?);
        }
        Ok(SparseMat::diag(values))
    }

    pub fn image(&self, w: &Word) -> Result<Mat<V>> {
        self.coproduct_image(w, 1)
    }

    pub fn delta_image(&self, w: &Word) -> Result<Mat<V>> {
        self.coproduct_image(w, 2)
    }

    pub fn delta_op_image(&self, w: &Word) -> Result<Mat<V>> {
        self.delta_image(w)?.flip_conjugate(self.n)
    }

    /// Image of the iterated coproduct `Δ^(m)(w)` on `V^{⊗m}`. `m = 1` is the
    /// representation itself and `m = 0` the counit (a 1x1 matrix).
    pub fn coproduct_image(&self, w: &Word, m: usize) -> Result<Mat<V>> {
        let dim = self.n.pow(m as u32);
        let mut out = SparseMat::zeros(dim);
        for (c, atoms) in w.terms() {
            let mut p = SparseMat::identity(dim);
            for a in atoms {
                p = p.mul(&self.atom_coproduct(a, m)?)?;
                if p.is_zero() {
                    break;
                }
            }
            out = out.add(&p.scale(&self.lift(c)?))?;
        }
        Ok(out)
    }

    fn atom_coproduct(&self, a: &Atom, m: usize) -> Result<Mat<V>> {
        let check = |i: usize| {
            if i == 0 || i >= self.n {
                Err(Error::Invalid(format!("generator index {i} outside gl({})", self.n)))
            } else {
                Ok(())
            }
        };
        match a {
            Atom::Group(d) => self.group_on(d, m),
            Atom::E(i) => {
                check(*i)?;
                let k = self.k(*i, 1)?;
                self.spread(self.e(*i), &SparseMat::identity(self.n), &k, m)
            }
            Atom::F(i) => {
                check(*i)?;
                let k_inv = self.k(*i, -1)?;
                self.spread(self.f(*i), &k_inv, &SparseMat::identity(self.n), m)
            }
        }
    }

    /// `sum_l before^{⊗l} ⊗ x ⊗ after^{⊗(m-l-1)}`.
    fn spread(&self, x: &Mat<V>, before: &Mat<V>, after: &Mat<V>, m: usize) -> Result<Mat<V>> {
        let mut out = SparseMat::zeros(self.n.pow(m as u32));
        for l in 0..m {
            let mut t = SparseMat::identity(1);
            for _ in 0..l {
                t = t.kron(before);
            }
            t = t.kron(x);
            for _ in (l + 1)..m {
                t = t.kron(after);
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Symbolic;
    use crate::qgroup::word::{e_root, f_root};

    fn rep(n: usize) -> Rep<Symbolic> {
        Rep::new(n, Symbolic).unwrap()
    }

    #[test]
    fn fundamental_generators() {
        let r = rep(3);
        assert_eq!(r.image(&Word::e(1)).unwrap(), r.unit(1, 2));
        assert_eq!(r.image(&Word::f(2)).unwrap(), r.unit(3, 2));
    }

    #[test]
    fn composite_roots_are_matrix_units() {
        let r = rep(4);
        for (i, j) in RootDatum::a(3).positive_roots() {
            assert_eq!(r.image(&e_root(i, j, &Word::e)).unwrap(), r.unit(i, j));
            assert_eq!(r.image(&f_root(i, j, &Word::f)).unwrap(), r.unit(j, i));
        }
    }

    #[test]
    fn coproduct_is_multiplicative_and_counital() {
        let r = rep(3);
        let (e1, e2) = (Word::e(1), Word::e(2));
        let lhs = r.delta_image(&e1.mul(&e2)).unwrap();
        let rhs = r.delta_image(&e1).unwrap().mul(&r.delta_image(&e2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(r.coproduct_image(&Word::f(1), 0).unwrap().is_zero());
        assert!(r
            .coproduct_image(&Word::group(vec![2, 0, -1]), 0)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn delta_op_is_flipped_delta() {
        let r = rep(3);
        let w = Word::e(1).mul(&Word::f(2)).add(&Word::group(vec![1, 0, 1]));
        let d = r.delta_image(&w).unwrap();
        assert_eq!(r.delta_op_image(&w).unwrap(), d.flip_conjugate(3).unwrap());
    }

    #[test]
    fn coassociativity_on_three_legs() {
        let r = rep(3);
        let i = SparseMat::identity(3);
        let k = r.k(1, 1).unwrap();
        let e = r.image(&Word::e(1)).unwrap();
        let d2 = r.delta_image(&Word::e(1)).unwrap();
        let d3 = r.coproduct_image(&Word::e(1), 3).unwrap();
        // (Δ ⊗ id)Δ(e) = Δ(e) ⊗ K + 1 ⊗ 1 ⊗ e
        let left = d2.kron(&k).add(&i.kron(&i).kron(&e)).unwrap();
        // (id ⊗ Δ)Δ(e) = e ⊗ K ⊗ K + 1 ⊗ Δ(e)
        let right = e.kron(&k).kron(&k).add(&i.kron(&d2)).unwrap();
        assert_eq!(d3, left);
        assert_eq!(d3, right);
    }
}
