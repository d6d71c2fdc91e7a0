use crate::error::{Error, Result};
use crate::field::{FieldElem, Rational, Scalar, Var, VarTable};
use crate::qgroup::{e_root, f_root, g_root, height, RootDatum, Word};

use super::element::{half, CartanExp, CartanVec, ParamTerm, QExpFactor, QTerm, TwistElement, TwistFactor};

/// Order of the q-exponential factors over positive roots.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootOrder {
    /// Lexicographic in `(i, j)`.
    Lex,
    /// Reverse lexicographic; for gl(3) this is `α_2, α_1+α_2, α_1`.
    ReverseLex,
}

impl RootOrder {
    pub fn arrange(self, mut roots: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
        if self == RootOrder::ReverseLex {
            roots.reverse();
        }
        roots
    }
}

/// Parameters of the esoteric twist of `gl(2N+1)`: `μ_1..μ_N` on the simple
/// roots of `sl(N+1)` (composite `μ` are products), `a_ik` for `i < k <= N`
/// and `b_i` for `i <= N`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TwistParams {
    n_half: usize,
}

impl TwistParams {
    pub fn new(n_half: usize) -> Result<Self> {
        if n_half == 0 {
            return Err(Error::Invalid("N must be at least 1".into()));
        }
        Ok(TwistParams { n_half })
    }

    pub fn n_half(&self) -> usize {
        self.n_half
    }

    /// Module dimension `2N + 1`.
    pub fn n(&self) -> usize {
        2 * self.n_half + 1
    }

    pub fn mu(&self, i: usize) -> FieldElem {
        FieldElem::var(Var::Mu(i as u16))
    }

    /// `μ_(i,j) = μ_i μ_(i+1) ... μ_(j-1)`.
    pub fn mu_root(&self, root: (usize, usize)) -> FieldElem {
        (root.0..root.1).fold(FieldElem::one(), |acc, t| acc.mul(&self.mu(t)))
    }

    /// Independent parameters including `q`: `(N+1)(N+2)/2`.
    pub fn count(&self) -> usize {
        let n = self.n_half;
        1 + n + n + n * (n - 1) / 2
    }

    pub fn vars(&self) -> VarTable {
        VarTable::esoteric(self.n_half)
    }
}

/// `H_k = sum_{i<=k} e_ii`.
fn h_sum(n: usize, k: usize) -> CartanVec {
    CartanVec::sum_of(n, 1..=k)
}

/// `Z_k = sum_{i>=k} e_ii`.
fn z_sum(n: usize, k: usize) -> CartanVec {
    CartanVec::sum_of(n, k..=n)
}

fn wedge_q(coeff: Rational, x: CartanVec, y: CartanVec) -> [QTerm; 2] {
    [
        QTerm {
            coeff: coeff.clone(),
            left: x.clone(),
            right: y.clone(),
        },
        QTerm {
            coeff: -coeff,
            left: y,
            right: x,
        },
    ]
}

fn wedge_param(var: Var, x: CartanVec, y: CartanVec) -> [ParamTerm; 2] {
    [
        ParamTerm {
            var,
            power: 1,
            left: x.clone(),
            right: y.clone(),
        },
        ParamTerm {
            var,
            power: -1,
            left: y,
            right: x,
        },
    ]
}

/// `q^(1/2 H_(N+1) ∧ Z_(N+1))` with `x ∧ y = x ⊗ y - y ⊗ x`.
pub fn build_f1(params: &TwistParams) -> TwistElement {
    let (n, k) = (params.n(), params.n_half() + 1);
    let c = CartanExp {
        q_terms: wedge_q(half(), h_sum(n, k), z_sum(n, k)).to_vec(),
        param_terms: Vec::new(),
    };
    TwistElement::new(n, vec![TwistFactor::Cartan(c)])
}

/// The gl(3) form `q^(1/2 (e11∧e22 + e11∧e33 + e22∧e33))`.
pub fn build_f1_gl3() -> TwistElement {
    let unit = |i| CartanVec::sum_of(3, [i]);
    let q_terms = [(1, 2), (1, 3), (2, 3)]
        .into_iter()
        .flat_map(|(i, j)| wedge_q(half(), unit(i), unit(j)))
        .collect();
    TwistElement::new(
        3,
        vec![TwistFactor::Cartan(CartanExp {
            q_terms,
            param_terms: Vec::new(),
        })],
    )
}

/// `ẽ_N = e_N s^(H_(N+1))`, the simple generator redefined by the first
/// twist; other `e_i` are unchanged.
pub fn dressed_e(params: &TwistParams, i: usize) -> Word {
    let (n, big_n) = (params.n(), params.n_half());
    let w = Word::e(i);
    if i == big_n {
        w.mul(&Word::group(h_sum(n, big_n + 1).diag))
    } else {
        w
    }
}

/// `f̃_(N+1) = f_(N+1) s^(Z_(N+1))`; other `f_i` are unchanged.
pub fn dressed_f(params: &TwistParams, i: usize) -> Word {
    let (n, big_n) = (params.n(), params.n_half());
    let w = Word::f(i);
    if i == big_n + 1 {
        w.mul(&Word::group(z_sum(n, big_n + 1).diag))
    } else {
        w
    }
}

/// The second stage: `prod_α exp_(q^2)(c_α e_α ⊗ g_α')` over the positive
/// roots of `sl(N+1)` in `order`, then `q^(t0 + H_N ⊗ Z_N)` with
/// `t0 = sum_{i<=N} e_ii ⊗ e_i'i'`. Root vectors are built from the dressed
/// simple generators and `c_α = μ_α (q^-1 - q)^(1 - ht α)`.
pub fn build_f2(params: &TwistParams, order: RootOrder) -> TwistElement {
    let (n, big_n) = (params.n(), params.n_half());
    let datum = RootDatum::esoteric(big_n);
    let q = FieldElem::q();
    let q_inv = q.inv().expect("q is nonzero");
    let scale = q_inv.sub(&q);
    let e_simple = |i| dressed_e(params, i);
    let f_simple = |i| dressed_f(params, i);

    let mut factors = Vec::new();
    for root in order.arrange(RootDatum::a(big_n).positive_roots()) {
        let norm = scale.pow(1 - height(root) as i32).expect("q - q^-1 is nonzero");
        factors.push(TwistFactor::QExp(QExpFactor {
            coeff: params.mu_root(root).mul(&norm),
            left: e_root(root.0, root.1, &e_simple),
            right: g_root(root.0, root.1, n, &f_simple),
            base: q.pow(2).expect("power of q"),
        }));
    }

    let mut q_terms: Vec<QTerm> = (1..=big_n)
        .map(|i| QTerm {
            coeff: Rational::one(),
            left: CartanVec::sum_of(n, [i]),
            right: CartanVec::sum_of(n, [datum.prime_index(i)]),
        })
        .collect();
    q_terms.push(QTerm {
        coeff: Rational::one(),
        left: h_sum(n, big_n),
        right: z_sum(n, big_n + 2),
    });
    factors.push(TwistFactor::Cartan(CartanExp {
        q_terms,
        param_terms: Vec::new(),
    }));
    TwistElement::new(n, factors)
}

/// The third stage: `prod a_ik^(X_i ∧ X_k) prod b_i^(X_i ∧ C)` with
/// `X_i = e_ii - e_i'i'`.
pub fn build_f3(params: &TwistParams) -> TwistElement {
    let (n, big_n) = (params.n(), params.n_half());
    let datum = RootDatum::esoteric(big_n);
    let x = |i: usize| {
        let mut v = CartanVec::zero(n);
        v.diag[i - 1] = 1;
        v.diag[datum.prime_index(i) - 1] = -1;
        v
    };
    let mut param_terms = Vec::new();
    for i in 1..=big_n {
        for k in (i + 1)..=big_n {
            param_terms.extend(wedge_param(Var::A(i as u16, k as u16), x(i), x(k)));
        }
    }
    for i in 1..=big_n {
        param_terms.extend(wedge_param(Var::B(i as u16), x(i), CartanVec::central(n)));
    }
    TwistElement::new(
        n,
        vec![TwistFactor::Cartan(CartanExp {
            q_terms: Vec::new(),
            param_terms,
        })],
    )
}

/// `F = F3 F2 F1`.
pub fn build_full(params: &TwistParams) -> TwistElement {
    build_full_with(params, RootOrder::Lex)
}

pub fn build_full_with(params: &TwistParams, order: RootOrder) -> TwistElement {
    TwistElement::compose(&[build_f3(params), build_f2(params, order), build_f1(params)]).expect("stages share n")
}

/// The standard universal R-matrix as an ordered product:
/// `q^(sum_i e_ii ⊗ e_ii) prod_α exp_(q^-2)(ω e_α ⊗ f_α)` over the positive
/// roots of `sl(n)` in `order`.
pub fn r_standard_element(n: usize, order: RootOrder) -> TwistElement {
    let q = FieldElem::q();
    let mut factors = vec![TwistFactor::Cartan(CartanExp {
        q_terms: (1..=n)
            .map(|i| QTerm {
                coeff: Rational::one(),
                left: CartanVec::sum_of(n, [i]),
                right: CartanVec::sum_of(n, [i]),
            })
            .collect(),
        param_terms: Vec::new(),
    })];
    for (i, j) in order.arrange(RootDatum::a(n - 1).positive_roots()) {
        factors.push(TwistFactor::QExp(QExpFactor {
            coeff: FieldElem::omega(),
            left: e_root(i, j, &Word::e),
            right: f_root(i, j, &Word::f),
            base: q.pow(-2).expect("power of q"),
        }));
    }
    TwistElement::new(n, factors)
}
