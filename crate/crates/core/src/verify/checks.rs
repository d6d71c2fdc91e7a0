use std::time::Instant;

use crate::error::Result;
use crate::field::{FieldElem, Scalar, Symbolic, Valuation, Var};
use crate::linalg::SparseMat;
use crate::qgroup::{relation_suite, Rep, Word};
use crate::twist::{
    build_f1, cg3_reference, dressed_e, dressed_f, l_matrices, match_parameters, r_esoteric, r_standard_direct,
    r_standard_product, variable_census, RootOrder, TwistElement, TwistParams,
};

use super::report::{CheckReport, Mode, Size, Witness};

type Mat<V> = SparseMat<<V as Valuation>::Elem>;

/// Runs `body` and wraps its witness (if any) into a timed report.
pub(crate) fn timed(
    check: &str,
    size: Size,
    mode: Mode,
    body: impl FnOnce() -> Result<Option<Witness>>,
) -> Result<CheckReport> {
    let start = Instant::now();
    let witness = body()?;
    Ok(CheckReport {
        check: check.to_string(),
        size,
        mode,
        witness,
        millis: start.elapsed().as_millis() as u64,
    })
}

fn compare<T: Scalar>(lhs: &SparseMat<T>, rhs: &SparseMat<T>, context: &str) -> Option<Witness> {
    lhs.first_difference(rhs).map(|d| Witness::entry(d, context))
}

/// The flip `P` on `V ⊗ V`.
fn flip<T: Scalar>(n: usize) -> SparseMat<T> {
    let mut p = SparseMat::zeros(n * n);
    for i in 0..n {
        for j in 0..n {
            p.set(i * n + j, j * n + i, T::one());
        }
    }
    p
}

/// Checks over one representation, labelled with the size and mode they
/// report.
#[derive(Clone, Debug)]
pub struct Checker<V: Valuation> {
    rep: Rep<V>,
    size: Size,
}

impl<V: Valuation> Checker<V> {
    pub fn new(rep: Rep<V>, size: Size) -> Self {
        Checker { rep, size }
    }

    /// Fundamental representation of `gl(2N+1)`.
    pub fn for_twist(params: &TwistParams, val: V) -> Result<Self> {
        Ok(Self::new(Rep::new(params.n(), val)?, Size::Half(params.n_half())))
    }

    pub fn for_rank(n: usize, val: V) -> Result<Self> {
        Ok(Self::new(Rep::new(n, val)?, Size::Rank(n)))
    }

    pub fn rep(&self) -> &Rep<V> {
        &self.rep
    }

    pub fn mode(&self) -> Mode {
        self.rep
            .val()
            .assignment()
            .map_or(Mode::Symbolic, |a| Mode::Numeric(a.clone()))
    }

    fn run(&self, check: &str, body: impl FnOnce() -> Result<Option<Witness>>) -> Result<CheckReport> {
        timed(check, self.size, self.mode(), body)
    }

    fn legs(&self, m: &Mat<V>, legs: (usize, usize)) -> Result<Mat<V>> {
        m.leg_embed(legs, 3, self.rep.n())
    }

    /// `R12 R13 R23 = R23 R13 R12` on `V^{⊗3}`.
    pub fn ybe(&self, r: &Mat<V>) -> Result<CheckReport> {
        self.run("ybe", || {
            let (r12, r13, r23) = (self.legs(r, (1, 2))?, self.legs(r, (1, 3))?, self.legs(r, (2, 3))?);
            let lhs = r12.mul(&r13)?.mul(&r23)?;
            let rhs = r23.mul(&r13)?.mul(&r12)?;
            Ok(compare(&lhs, &rhs, "R12 R13 R23 = R23 R13 R12"))
        })
    }

    /// `(PR - q)(PR + q^-1) = 0`.
    pub fn hecke(&self, r: &Mat<V>) -> Result<CheckReport> {
        self.run("hecke", || {
            let n = self.rep.n();
            let pr = flip::<V::Elem>(n).mul(r)?;
            let id = SparseMat::identity(n * n);
            let q = self.rep.q()?;
            let lhs = pr.sub(&id.scale(&q))?.mul(&pr.add(&id.scale(&q.inv()?))?)?;
            Ok(compare(&lhs, &SparseMat::zeros(n * n), "(PR - q)(PR + q^-1) = 0"))
        })
    }

    /// `F12 (Δ⊗id)F = F23 (id⊗Δ)F` on `V^{⊗3}`.
    pub fn cocycle(&self, f: &TwistElement) -> Result<CheckReport> {
        self.run("cocycle", || {
            let f_image = f.eval(&self.rep)?;
            let lhs = self.legs(&f_image, (1, 2))?.mul(&f.eval_split(&self.rep, 2, 1)?)?;
            let rhs = self.legs(&f_image, (2, 3))?.mul(&f.eval_split(&self.rep, 1, 2)?)?;
            Ok(compare(&lhs, &rhs, "F12 (D x id)F = F23 (id x D)F"))
        })
    }

    /// Factorization of the second stage after conjugating by the first:
    /// `F1_12 (Δ⊗id)(F2) F1_12^-1 = F2_23 F2_13` and
    /// `F1_23 (id⊗Δ)(F2) F1_23^-1 = F2_12 F2_13`.
    pub fn factorization(&self, f1: &TwistElement, f2: &TwistElement) -> Result<CheckReport> {
        self.run("factorization", || {
            let g = f1.eval(&self.rep)?;
            let g_inv = f1.eval_inverse(&self.rep)?;
            let h = f2.eval(&self.rep)?;
            let (h12, h13, h23) = (self.legs(&h, (1, 2))?, self.legs(&h, (1, 3))?, self.legs(&h, (2, 3))?);

            let (g12, g12_inv) = (self.legs(&g, (1, 2))?, self.legs(&g_inv, (1, 2))?);
            let lhs = g12.mul(&f2.eval_split(&self.rep, 2, 1)?)?.mul(&g12_inv)?;
            if let Some(w) = compare(&lhs, &h23.mul(&h13)?, "F1_12 (D x id)F2 F1_12^-1 = F2_23 F2_13") {
                return Ok(Some(w));
            }
            let (g23, g23_inv) = (self.legs(&g, (2, 3))?, self.legs(&g_inv, (2, 3))?);
            let lhs = g23.mul(&f2.eval_split(&self.rep, 1, 2)?)?.mul(&g23_inv)?;
            Ok(compare(
                &lhs,
                &h12.mul(&h13)?,
                "F1_23 (id x D)F2 F1_23^-1 = F2_12 F2_13",
            ))
        })
    }

    /// `R Δ(x) = Δ^op(x) R` for every Chevalley generator and every `q^(e_jj)`,
    /// with `Δ` replaced by `F Δ F^-1` when a twist is given.
    pub fn intertwiner(&self, r: &Mat<V>, twist: Option<&TwistElement>) -> Result<CheckReport> {
        let name = if twist.is_some() {
            "intertwine"
        } else {
            "intertwine-untwisted"
        };
        self.run(name, || {
            let n = self.rep.n();
            let conj = match twist {
                Some(f) => Some((f.eval(&self.rep)?, f.eval_inverse(&self.rep)?)),
                None => None,
            };
            let mut gens: Vec<(String, Word)> = Vec::new();
            for i in 1..n {
                gens.push((format!("e{i}"), Word::e(i)));
                gens.push((format!("f{i}"), Word::f(i)));
            }
            for j in 1..=n {
                let mut d = vec![0; n];
                d[j - 1] = 2;
                gens.push((format!("q^e{j}{j}"), Word::group(d)));
            }
            for (label, w) in gens {
                let mut d = self.rep.delta_image(&w)?;
                if let Some((fm, fi)) = &conj {
                    d = fm.mul(&d)?.mul(fi)?;
                }
                let d_op = d.flip_conjugate(n)?;
                if let Some(wit) = compare(&r.mul(&d)?, &d_op.mul(r)?, &format!("R D({label}) = D^op({label}) R")) {
                    return Ok(Some(wit));
                }
            }
            Ok(None)
        })
    }

    /// FRT relations `R12 L13 L23 = L23 L13 R12` for `(L, L) = (L+, L+)`,
    /// `(L-, L-)` and `(L+, L-)`, where `L+ = R` and `L- = σ(R^-1)`.
    pub fn rll(&self, r: &Mat<V>) -> Result<CheckReport> {
        self.run("rll", || {
            let l = l_matrices(r, self.rep.n())?;
            let r12 = self.legs(r, (1, 2))?;
            for (label, a, b) in [
                ("L+ L+", &l.plus, &l.plus),
                ("L- L-", &l.minus, &l.minus),
                ("L+ L-", &l.plus, &l.minus),
            ] {
                let (a13, b23) = (self.legs(a, (1, 3))?, self.legs(b, (2, 3))?);
                let lhs = r12.mul(&a13)?.mul(&b23)?;
                let rhs = b23.mul(&a13)?.mul(&r12)?;
                if let Some(w) = compare(&lhs, &rhs, &format!("R12 L13 L23 = L23 L13 R12 for {label}")) {
                    return Ok(Some(w));
                }
            }
            Ok(None)
        })
    }

    /// `L±` of `target` equal `F21 L±_S F^-1`, where `L±_S` come from the
    /// standard R-matrix.
    pub fn l_matrix_identities(&self, f: &TwistElement, target: &Mat<V>) -> Result<CheckReport> {
        self.run("l-matrix", || {
            let n = self.rep.n();
            let standard = l_matrices(&r_standard_direct(&self.rep)?, n)?;
            let twisted = l_matrices(target, n)?;
            let f21 = f.eval(&self.rep)?.flip_conjugate(n)?;
            let f_inv = f.eval_inverse(&self.rep)?;
            for (label, s, t) in [
                ("L+", &standard.plus, &twisted.plus),
                ("L-", &standard.minus, &twisted.minus),
            ] {
                let conj = f21.mul(s)?.mul(&f_inv)?;
                if let Some(w) = compare(t, &conj, &format!("{label} = F21 {label}_S F^-1")) {
                    return Ok(Some(w));
                }
            }
            Ok(None)
        })
    }

    /// Twisting by the first stage alone:
    /// `Δ_t(ẽ_N) = ẽ_N ⊗ q^(e_NN + H_N) + 1 ⊗ ẽ_N` and
    /// `Δ_t(f̃_(N+1)) = f̃_(N+1) ⊗ 1 + q^(e_(N+2,N+2) + Z_(N+2)) ⊗ f̃_(N+1)`.
    pub fn twisted_coproduct(&self, params: &TwistParams) -> Result<CheckReport> {
        self.run("twisted-coproduct", || {
            let (n, big_n) = (params.n(), params.n_half());
            let f1 = build_f1(params);
            let (g, g_inv) = (f1.eval(&self.rep)?, f1.eval_inverse(&self.rep)?);
            let id = SparseMat::identity(n);
            // q-exponents doubled into s-exponents
            let k: Vec<i32> = (1..=n)
                .map(|i| {
                    if i == big_n {
                        4
                    } else if i < big_n {
                        2
                    } else {
                        0
                    }
                })
                .collect();
            let l: Vec<i32> = (1..=n)
                .map(|i| {
                    if i == big_n + 2 {
                        4
                    } else if i > big_n + 2 {
                        2
                    } else {
                        0
                    }
                })
                .collect();

            let e = dressed_e(params, big_n);
            let e_img = self.rep.image(&e)?;
            let lhs = g.mul(&self.rep.delta_image(&e)?)?.mul(&g_inv)?;
            let rhs = e_img.kron(&self.rep.group(&k)?).add(&id.kron(&e_img))?;
            if let Some(w) = compare(&lhs, &rhs, &format!("D_t(e~{big_n})")) {
                return Ok(Some(w));
            }

            let f = dressed_f(params, big_n + 1);
            let f_img = self.rep.image(&f)?;
            let lhs = g.mul(&self.rep.delta_image(&f)?)?.mul(&g_inv)?;
            let rhs = f_img.kron(&id).add(&self.rep.group(&l)?.kron(&f_img))?;
            Ok(compare(&lhs, &rhs, &format!("D_t(f~{})", big_n + 1)))
        })
    }

    /// Defining relations of the quantum group on the representation.
    pub fn relations(&self) -> Result<CheckReport> {
        self.run("relations", || {
            let suite = relation_suite(&self.rep)?;
            Ok(suite
                .into_iter()
                .find(|c| !c.pass)
                .map(|c| Witness::scalar("fails", "holds", c.name)))
        })
    }

    /// Ordered-product standard R-matrix against the direct formula.
    pub fn factorized_rs(&self, order: RootOrder) -> Result<CheckReport> {
        self.run("factorized-rs", || {
            let product = r_standard_product(&self.rep, order)?;
            Ok(compare(
                &product,
                &r_standard_direct(&self.rep)?,
                "ordered product = direct R_S",
            ))
        })
    }
}

/// The symbolic `gl(3)` esoteric R-matrix matched entrywise against the
/// explicit three-parameter reference after solving for `p`, `ν`.
pub fn check_compare_cg() -> Result<CheckReport> {
    check_compare_cg_against(&cg3_reference())
}

pub fn check_compare_cg_against(reference: &SparseMat<FieldElem>) -> Result<CheckReport> {
    timed("compare-cg", Size::Half(1), Mode::Symbolic, || {
        let params = TwistParams::new(1)?;
        let rep = Rep::new(params.n(), Symbolic)?;
        let r = r_esoteric(&rep, &params)?;
        match match_parameters(&r, reference, &[Var::P, Var::Nu]) {
            Ok(_) => Ok(None),
            Err(crate::Error::Inconsistent { row, col, lhs, rhs }) => Ok(Some(Witness {
                row: Some(row),
                col: Some(col),
                lhs,
                rhs,
                context: "R_FG = reference under the solved p, nu".into(),
            })),
            Err(crate::Error::Invalid(msg)) => Ok(Some(Witness::scalar("unsolved", "solved", msg))),
            Err(e) => Err(e),
        }
    })
}

/// Distinct parameters of the symbolic esoteric R-matrix (`s` counted as
/// `q`) against `(N+1)(N+2)/2`.
pub fn check_param_count(params: &TwistParams) -> Result<CheckReport> {
    timed("param-count", Size::Half(params.n_half()), Mode::Symbolic, || {
        let rep = Rep::new(params.n(), Symbolic)?;
        let found = variable_census(&r_esoteric(&rep, params)?).len();
        let n = params.n_half();
        let expected = (n + 1) * (n + 2) / 2;
        Ok((found != expected).then(|| Witness::scalar(found, expected, "distinct parameters = (N+1)(N+2)/2")))
    })
}
