use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldElem, Monomial, Rational, Scalar, Valuation, Var};
use crate::linalg::SparseMat;
use crate::qgroup::{Rep, Word};

use super::build::{build_full, r_standard_element, RootOrder, TwistParams};
use super::element::TwistElement;

type Mat<V> = SparseMat<<V as Valuation>::Elem>;

/// `q sum e_ii⊗e_ii + sum_{i!=j} e_ii⊗e_jj + ω sum_{i<j} e_ij⊗e_ji`.
pub fn r_standard_direct<V: Valuation>(rep: &Rep<V>) -> Result<Mat<V>> {
    let n = rep.n();
    let q = rep.q()?;
    let omega = rep.omega()?;
    let mut m = SparseMat::zeros(n * n);
    for i in 0..n {
        for j in 0..n {
            let d = i * n + j;
            m.set(d, d, if i == j { q.clone() } else { V::Elem::one() });
            if i < j {
                m.set(i * n + j, j * n + i, omega.clone());
            }
        }
    }
    Ok(m)
}

/// Ordered-product form of the standard R-matrix in the given root order.
pub fn r_standard_product<V: Valuation>(rep: &Rep<V>, order: RootOrder) -> Result<Mat<V>> {
    r_standard_element(rep.n(), order).eval(rep)
}

/// The ordered product in reverse-lexicographic root order, checked against
/// [`r_standard_direct`].
pub fn r_standard_factorized<V: Valuation>(rep: &Rep<V>) -> Result<Mat<V>> {
    let product = r_standard_product(rep, RootOrder::ReverseLex)?;
    match product.first_difference(&r_standard_direct(rep)?) {
        None => Ok(product),
        Some(d) => Err(Error::OrderingViolation {
            row: d.row + 1,
            col: d.col + 1,
        }),
    }
}

/// `F21 R F^-1`, with `F^-1` taken factor by factor.
pub fn twist_r<V: Valuation>(rep: &Rep<V>, f: &TwistElement, r: &Mat<V>) -> Result<Mat<V>> {
    let f21 = f.eval(rep)?.flip_conjugate(rep.n())?;
    f21.mul(r)?.mul(&f.eval_inverse(rep)?)
}

/// The esoteric R-matrix `F21 R_S F^-1` of `gl(2N+1)` for the full twist.
pub fn r_esoteric<V: Valuation>(rep: &Rep<V>, params: &TwistParams) -> Result<Mat<V>> {
    twist_r(rep, &build_full(params), &r_standard_direct(rep)?)
}

/// `F Δ(w) F^-1` on `V ⊗ V`.
pub fn twisted_coproduct<V: Valuation>(rep: &Rep<V>, f: &TwistElement, w: &Word) -> Result<Mat<V>> {
    f.eval(rep)?.mul(&rep.delta_image(w)?)?.mul(&f.eval_inverse(rep)?)
}

/// FRT matrices at representation level: `L+ = R`, `L- = σ(R^-1)`.
#[derive(Clone, Debug)]
pub struct LMatrices<T> {
    pub plus: SparseMat<T>,
    pub minus: SparseMat<T>,
}

pub fn l_matrices<T: Scalar>(r: &SparseMat<T>, n: usize) -> Result<LMatrices<T>> {
    Ok(LMatrices {
        plus: r.clone(),
        minus: r.inverse()?.flip_conjugate(n)?,
    })
}

/// The explicit three-parameter gl(3) matrix in `q = s^2`, `p`, `ν`:
/// `R_S + (p-1)(e11⊗e22 + e22⊗e33) + (p^-1-1)(e22⊗e11 + e33⊗e22)
///  + (p^2/q-1) e11⊗e33 + (q/p^2-1) e33⊗e11 + qν (e32⊗e12 - p^2/q^2 e12⊗e32)`.
pub fn cg3_reference() -> SparseMat<FieldElem> {
    let n = 3;
    let rep = Rep::new(n, crate::field::Symbolic).expect("gl(3)");
    let mut m = r_standard_direct(&rep).expect("symbolic R_S");
    let q = FieldElem::q();
    let p = FieldElem::var(Var::P);
    let nu = FieldElem::var(Var::Nu);
    let p_inv = p.inv().expect("p is nonzero");
    let p2 = p.mul(&p);
    let one = FieldElem::one();
    let diag_index = |i: usize, j: usize| (i - 1) * n + (j - 1);
    let mut bump = |i: usize, j: usize, delta: FieldElem| {
        let d = diag_index(i, j);
        m.add_to(d, d, &delta);
    };
    bump(1, 2, p.sub(&one));
    bump(2, 3, p.sub(&one));
    bump(2, 1, p_inv.sub(&one));
    bump(3, 2, p_inv.sub(&one));
    bump(1, 3, p2.div(&q).expect("q").sub(&one));
    bump(3, 1, q.div(&p2).expect("p").sub(&one));
    // e32⊗e12 maps v2⊗v2 to v3⊗v1; e12⊗e32 maps v2⊗v2 to v1⊗v3
    let qnu = q.mul(&nu);
    m.add_to(diag_index(3, 1), diag_index(2, 2), &qnu);
    let corner = qnu.mul(&p2).div(&q.mul(&q)).expect("q").neg();
    m.add_to(diag_index(1, 3), diag_index(2, 2), &corner);
    m
}

/// Variables occurring in any entry.
pub fn variable_census(m: &SparseMat<FieldElem>) -> BTreeSet<Var> {
    m.entries().flat_map(|(_, _, v)| v.vars()).collect()
}

/// Solves `reference(unknowns) = target` entrywise for the given unknowns
/// by monomial equations, then verifies every entry under the solution.
pub fn match_parameters(
    target: &SparseMat<FieldElem>,
    reference: &SparseMat<FieldElem>,
    unknowns: &[Var],
) -> Result<BTreeMap<Var, FieldElem>> {
    if target.dim() != reference.dim() {
        return Err(Error::DimensionMismatch("matched matrices differ in size".into()));
    }
    let mut solved: BTreeMap<Var, FieldElem> = BTreeMap::new();
    let positions: Vec<(usize, usize)> = {
        let mut p: BTreeSet<(usize, usize)> = reference.entries().map(|(r, c, _)| (r, c)).collect();
        p.extend(target.entries().map(|(r, c, _)| (r, c)));
        p.into_iter().collect()
    };
    loop {
        let mut progress = false;
        for &(r, c) in &positions {
            let lhs = reference.at(r, c).compose(&solved)?;
            let open: Vec<Var> = lhs
                .vars()
                .into_iter()
                .filter(|v| unknowns.contains(v) && !solved.contains_key(v))
                .collect();
            if open.len() != 1 {
                continue;
            }
            let u = open[0];
            if let Some(value) = solve_monomial(&lhs, &target.at(r, c), u) {
                solved.insert(u, value);
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    if let Some(u) = unknowns.iter().find(|u| !solved.contains_key(u)) {
        return Err(Error::Invalid(format!("no monomial equation determines {u}")));
    }
    for &(r, c) in &positions {
        let lhs = target.at(r, c);
        let rhs = reference.at(r, c).compose(&solved)?;
        if lhs != rhs {
            return Err(Error::Inconsistent {
                row: r + 1,
                col: c + 1,
                lhs: lhs.canonical_string(),
                rhs: rhs.canonical_string(),
            });
        }
    }
    Ok(solved)
}

/// Solves `lhs(u) = rhs` when both sides are monomials.
fn solve_monomial(lhs: &FieldElem, rhs: &FieldElem, u: Var) -> Option<FieldElem> {
    let (lc, lm) = lhs.as_monomial()?;
    let (rc, rm) = rhs.as_monomial()?;
    if rhs.vars().contains(&u) {
        return None;
    }
    let e = lm.exponent(u);
    if e == 0 {
        return None;
    }
    let rest = lm.div(&Monomial::var_pow(u, e));
    let power = rm.div(&rest);
    let coeff = rational_root(&(rc / lc), e)?;
    let mut pairs = Vec::new();
    for &(v, k) in power.pairs() {
        if k % e != 0 {
            return None;
        }
        pairs.push((v, k / e));
    }
    Some(FieldElem::monomial(coeff, &Monomial::from_pairs(pairs)))
}

fn rational_root(x: &Rational, e: i32) -> Option<Rational> {
    let x = if e < 0 { x.recip() } else { x.clone() };
    let k = e.unsigned_abs();
    if x.is_negative() && k.is_multiple_of(2) {
        return None;
    }
    let root = |n: &BigInt| -> Option<BigInt> {
        let r = if n.is_negative() {
            -(-n).nth_root(k)
        } else {
            n.nth_root(k)
        };
        (r.pow(k) == *n).then_some(r)
    };
    if Zero::is_zero(&x) {
        return None;
    }
    Some(Rational::new(root(x.numer())?, root(x.denom())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Symbolic;

    #[test]
    fn direct_counts() {
        for n in [2, 3, 4] {
            let r = r_standard_direct(&Rep::new(n, Symbolic).unwrap()).unwrap();
            assert_eq!(r.nnz(), n + n * (n - 1) + n * (n - 1) / 2);
        }
        let r = r_standard_direct(&Rep::new(2, Symbolic).unwrap()).unwrap();
        assert_eq!(r.at(1, 2), FieldElem::omega());
        assert_eq!(r.at(0, 0), FieldElem::q());
    }

    #[test]
    fn roots_of_rationals() {
        let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
        assert_eq!(rational_root(&r(4, 9), 2), Some(r(2, 3)));
        assert_eq!(rational_root(&r(-8, 1), 3), Some(r(-2, 1)));
        assert_eq!(rational_root(&r(2, 1), 2), None);
        assert_eq!(rational_root(&r(4, 1), -2), Some(r(1, 2)));
    }

    #[test]
    fn reference_reduces_to_standard() {
        let m = cg3_reference();
        let mut at = BTreeMap::new();
        at.insert(Var::P, FieldElem::one());
        at.insert(Var::Nu, FieldElem::zero());
        let reduced = m.map(|x| x.compose(&at)).unwrap();
        // only the v1⊗v3 and v3⊗v1 diagonal slots keep a q-dependence
        let mut expect = r_standard_direct(&Rep::new(3, Symbolic).unwrap()).unwrap();
        expect.set(2, 2, FieldElem::q().inv().unwrap());
        expect.set(6, 6, FieldElem::q());
        assert_eq!(reduced, expect);
        assert_eq!(m.at(6, 4), FieldElem::q().mul(&FieldElem::var(Var::Nu)));
    }
}
