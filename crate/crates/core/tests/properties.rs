use proptest::prelude::*;

use qtwist::field::{poly_gcd, LaurentPoly, Monomial};
use qtwist::twist::{build_full, r_standard_direct, TwistParams};
use qtwist::{Assignment, FieldElem, Numeric, Rational, Rep, Scalar, SparseMat, Symbolic, Var};

const VARS: [Var; 3] = [Var::S, Var::Mu(1), Var::B(1)];

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(-2i32..=3, 3).prop_map(|e| Monomial::from_pairs(VARS.into_iter().zip(e)))
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((monomial(), -4i64..=4, 1i64..=3), 0..4)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(m, n, d)| (m, rat(n, d)))))
}

fn elem() -> impl Strategy<Value = FieldElem> {
    (poly(), poly()).prop_filter_map("zero denominator", |(n, d)| FieldElem::new(n, d).ok())
}

fn nonzero_elem() -> impl Strategy<Value = FieldElem> {
    elem().prop_filter("zero", |x| !x.is_zero())
}

/// Points away from the small integers where generic denominators tend to
/// vanish.
fn point() -> impl Strategy<Value = Assignment> {
    prop::collection::vec((2i64..40, 1i64..7), 3).prop_map(|vals| {
        let mut a = Assignment::new();
        for (v, (n, d)) in VARS.into_iter().zip(vals) {
            a.insert(v, rat(n, d));
        }
        a
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn matrix(dim: usize) -> impl Strategy<Value = SparseMat<Rational>> {
    prop::collection::vec(((0..dim), (0..dim), rational()), 0..(2 * dim))
        .prop_map(move |e| SparseMat::from_entries(dim, e.into_iter().filter(|x| !x.2.is_zero())).unwrap())
}

fn strictly_upper(dim: usize) -> impl Strategy<Value = SparseMat<Rational>> {
    matrix(dim).prop_map(move |m| {
        let entries = m.entries().filter(|(r, c, _)| r < c).map(|(r, c, v)| (r, c, v.clone()));
        SparseMat::from_entries(dim, entries).unwrap()
    })
}

/// Unit lower times upper with a nonvanishing diagonal: always invertible.
fn invertible(dim: usize) -> impl Strategy<Value = SparseMat<Rational>> {
    (
        strictly_upper(dim),
        strictly_upper(dim),
        prop::collection::vec(rational(), dim),
    )
        .prop_map(move |(l, u, d)| {
            let lower = l.transpose().add(&SparseMat::identity(dim)).unwrap();
            let diag: Vec<Rational> = d.into_iter().map(|x| if x.is_zero() { rat(1, 1) } else { x }).collect();
            let upper = u.add(&SparseMat::diag(diag)).unwrap();
            lower.mul(&upper).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.add(&FieldElem::zero()), a.clone());
        prop_assert_eq!(a.mul(&FieldElem::one()), a.clone());
    }

    #[test]
    fn field_inverse(a in nonzero_elem()) {
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        prop_assert_eq!(a.inv().unwrap().inv().unwrap(), a);
    }

    #[test]
    fn normalization_is_idempotent_and_round_trips(a in elem()) {
        prop_assert_eq!(a.normalize(), a.clone());
        let text = a.canonical_string();
        let back: FieldElem = text.parse().unwrap();
        prop_assert_eq!(back.canonical_string(), text);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in elem(), b in elem(), p in point()) {
        let (Ok(x), Ok(y)) = (p.substitute(&a), p.substitute(&b)) else {
            return Ok(());
        };
        prop_assert_eq!(p.substitute(&a.add(&b)).unwrap(), &x + &y);
        prop_assert_eq!(p.substitute(&a.mul(&b)).unwrap(), &x * &y);
        if !b.is_zero() && !Scalar::is_zero(&y) {
            prop_assert_eq!(p.substitute(&a.div(&b).unwrap()).unwrap(), &x / &y);
        }
    }
}

/// Ordinary polynomials (no negative exponents), nonzero.
fn polynomial() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter_map("zero", |p| {
        let m = p.min_exponents();
        (!p.is_zero()).then(|| p.mul_monomial(&m.inverse()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gcd_contains_common_factor(f in polynomial(), g in polynomial(), h in polynomial()) {
        let a = &f * &h;
        let b = &g * &h;
        let d = poly_gcd(&a, &b);
        prop_assert!(a.div_exact(&d).is_some());
        prop_assert!(b.div_exact(&d).is_some());
        prop_assert!(d.div_exact(&h).is_some(), "gcd {} misses {}", d, h);
    }

    #[test]
    fn qexp_inversion(m in strictly_upper(5), c in rational(), k in 0usize..5) {
        let base = [rat(2, 1), rat(3, 1), rat(1, 3), rat(-5, 2), rat(4, 1)][k].clone();
        let e = SparseMat::qexp_nilpotent(&c, &m, &base).unwrap();
        let e_inv = SparseMat::qexp_nilpotent(&c.neg(), &m, &base.inv().unwrap()).unwrap();
        prop_assert!(e.mul(&e_inv).unwrap().is_identity());
        prop_assert!(e_inv.mul(&e).unwrap().is_identity());
    }

    #[test]
    fn kron_is_associative_and_mixed_product(a in matrix(2), b in matrix(3), c in matrix(2), d in matrix(3)) {
        prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)).unwrap(), a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()));
    }

    #[test]
    fn disjoint_legs_commute(a in matrix(3), b in matrix(9), leg in 0usize..3) {
        let others: Vec<usize> = (0..3).filter(|l| *l != leg).collect();
        let x = a.embed_legs(&[leg], 3, 3).unwrap();
        let y = b.embed_legs(&others, 3, 3).unwrap();
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
    }

    #[test]
    fn leg_embedding_matches_kron(a in matrix(9)) {
        let id = SparseMat::identity(3);
        prop_assert_eq!(a.leg_embed((1, 2), 3, 3).unwrap(), a.kron(&id));
        prop_assert_eq!(a.leg_embed((2, 3), 3, 3).unwrap(), id.kron(&a));
        let flipped = a.flip_conjugate(3).unwrap();
        prop_assert_eq!(a.leg_embed((2, 1), 3, 3).unwrap(), flipped.kron(&id));
    }

    #[test]
    fn inverse_is_two_sided(m in invertible(6)) {
        let inv = m.inverse().unwrap();
        prop_assert!(m.mul(&inv).unwrap().is_identity());
        prop_assert!(inv.mul(&m).unwrap().is_identity());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn symbolic_qexp_inversion(m in strictly_upper(4), c in nonzero_elem()) {
        let m = m.map(|x| Ok(FieldElem::from_rational(x))).unwrap();
        let q = FieldElem::q();
        let e = SparseMat::qexp_nilpotent(&c, &m, &q).unwrap();
        let e_inv = SparseMat::qexp_nilpotent(&c.neg(), &m, &q.inv().unwrap()).unwrap();
        prop_assert!(e.mul(&e_inv).unwrap().is_identity());
    }
}

#[test]
fn singular_matrix_is_reported() {
    let m = SparseMat::from_entries(
        2,
        [
            (0, 0, rat(1, 1)),
            (0, 1, rat(2, 1)),
            (1, 0, rat(2, 1)),
            (1, 1, rat(4, 1)),
        ],
    )
    .unwrap();
    assert!(matches!(m.inverse(), Err(qtwist::Error::Singular)));
}

#[test]
fn factorwise_twist_inverse_agrees_with_elimination() {
    for n_half in [1, 2] {
        let p = TwistParams::new(n_half).unwrap();
        let f = build_full(&p);
        let symbolic = Rep::new(p.n(), Symbolic).unwrap();
        let image = f.eval(&symbolic).unwrap();
        assert_eq!(
            f.eval_inverse(&symbolic).unwrap(),
            image.inverse().unwrap(),
            "N={n_half}"
        );
    }
    let p = TwistParams::new(3).unwrap();
    let rep = Rep::new(p.n(), Numeric(qtwist::verify::generic_assignment(3, 0))).unwrap();
    let f = build_full(&p);
    assert_eq!(f.eval_inverse(&rep).unwrap(), f.eval(&rep).unwrap().inverse().unwrap());
}

#[test]
fn numeric_mode_agrees_with_specialized_symbolic() {
    let p = TwistParams::new(2).unwrap();
    let point = qtwist::verify::generic_assignment(2, 4);
    let f = build_full(&p);
    let sym = Rep::new(p.n(), Symbolic).unwrap();
    let num = Rep::new(p.n(), Numeric(point.clone())).unwrap();
    let lhs = f.eval_split(&sym, 2, 1).unwrap().map(|x| point.substitute(x)).unwrap();
    assert_eq!(lhs, f.eval_split(&num, 2, 1).unwrap());
    let rs = r_standard_direct(&sym).unwrap().map(|x| point.substitute(x)).unwrap();
    assert_eq!(rs, r_standard_direct(&num).unwrap());
}
