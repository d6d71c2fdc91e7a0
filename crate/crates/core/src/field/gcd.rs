//! Multivariate gcd over Q by recursive primitive remainder sequences.
//!
//! Inputs are ordinary polynomials (no negative exponents). The result is
//! defined up to a nonzero rational factor and is returned primitive.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{LaurentPoly, Monomial};
use super::var::Var;

pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    debug_assert!(a.is_polynomial() && b.is_polynomial());
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::one();
    }
    let ma = a.min_exponents();
    let mb = b.min_exponents();
    let mono = LaurentPoly::term(ma.min_exp(&mb), num_traits::One::one());
    if a.len() == 1 || b.len() == 1 {
        return mono;
    }
    let a1 = a.mul_monomial(&ma.inverse());
    let b1 = b.mul_monomial(&mb.inverse());
    let g = gcd_no_monomial_content(&a1, &b1);
    (&g * &mono).primitive()
}

fn gcd_no_monomial_content(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::one();
    }
    if a == b {
        return a.primitive();
    }
    let va = a.vars();
    let vb = b.vars();
    // A variable present in only one argument cannot divide the gcd beyond
    // that argument's content in it.
    if let Some(&v) = va.iter().find(|v| !vb.contains(v)) {
        return poly_gcd(&content(a, v), b);
    }
    if let Some(&v) = vb.iter().find(|v| !va.contains(v)) {
        return poly_gcd(a, &content(b, v));
    }
    // A gcd free of v divides every coefficient in v, so it is the gcd of
    // the contents, which have one variable fewer.
    if let Some(&v) = va.iter().find(|&&v| image_gcd_degree(a, b, v) == Some(0)) {
        return poly_gcd(&content(a, v), &content(b, v));
    }
    if va.len() == 1 {
        let x = *va.iter().next().expect("one variable");
        return univariate_gcd(dense(a, x), dense(b, x))
            .into_iter()
            .enumerate()
            .fold(LaurentPoly::zero(), |acc, (d, c)| {
                &acc + &LaurentPoly::term(Monomial::var_pow(x, d as i32), c)
            })
            .primitive();
    }
    let x = *va.iter().next().expect("nonconstant");
    let y = *va.iter().next_back().expect("nonconstant");
    let ca = content(a, x);
    let cb = content(b, x);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = poly_gcd(&ca, &cb);
    let g = interpolated_gcd(&pa, &pb, x, y);
    (&c * &g).primitive()
}

/// gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content(p: &LaurentPoly, v: Var) -> LaurentPoly {
    let coeffs = p.to_univariate(v);
    let mut it = coeffs.values();
    let mut g = it.next().cloned().unwrap_or_default();
    for c in it {
        if g.is_constant() {
            break;
        }
        g = poly_gcd(&g, c);
    }
    if g.is_constant() {
        LaurentPoly::one()
    } else {
        g.primitive()
    }
}

fn lead_coeff(p: &LaurentPoly, v: Var) -> LaurentPoly {
    p.to_univariate(v)
        .into_iter()
        .next_back()
        .map(|(_, c)| c)
        .unwrap_or_default()
}

/// `p` with `v` replaced by `r`.
fn eval_var(p: &LaurentPoly, v: Var, r: &BigRational) -> LaurentPoly {
    p.to_univariate(v).iter().fold(LaurentPoly::zero(), |acc, (&d, c)| {
        &acc + &c.scale(&num_traits::pow(r.clone(), d as usize))
    })
}

/// gcd of `a` and `b`, both primitive in `x`, by evaluating `y` at integer
/// points, taking gcds recursively and interpolating. Each image is scaled
/// so its leading coefficient in `x` is the image of
/// `gamma = gcd(lc_x a, lc_x b)`, which makes the images consistent; images
/// of too high degree in `x` come from unlucky points and are dropped. The
/// result is confirmed by trial division.
fn interpolated_gcd(a: &LaurentPoly, b: &LaurentPoly, x: Var, y: Var) -> LaurentPoly {
    let gamma = poly_gcd(&lead_coeff(a, x), &lead_coeff(b, x));
    let bound = (gamma.degree_in(y) + a.degree_in(y).min(b.degree_in(y))) as usize;
    let (dxa, dxb) = (a.degree_in(x), b.degree_in(x));
    let mut images: Vec<(BigRational, LaurentPoly)> = Vec::new();
    let mut min_deg = dxa.min(dxb);
    for r in (1i64..).map(|n| BigRational::from_integer(n.into())) {
        let gr_gamma = eval_var(&gamma, y, &r);
        if gr_gamma.is_zero() {
            continue;
        }
        let (ar, br) = (eval_var(a, y, &r), eval_var(b, y, &r));
        if ar.degree_in(x) != dxa || br.degree_in(x) != dxb {
            continue;
        }
        let g = poly_gcd(&ar, &br);
        let d = g.degree_in(x);
        if d == 0 {
            return LaurentPoly::one();
        }
        if d > min_deg {
            continue;
        }
        if d < min_deg {
            min_deg = d;
            images.clear();
        }
        let Some(h) = (&g * &gr_gamma).div_exact(&lead_coeff(&g, x)) else {
            continue;
        };
        images.push((r, h));
        if images.len() <= bound {
            continue;
        }
        let candidate = primitive_in(&lagrange(&images, y), x);
        if a.div_exact(&candidate).is_some() && b.div_exact(&candidate).is_some() {
            return candidate.primitive();
        }
        images.clear();
    }
    unreachable!("integer points are unbounded")
}

fn primitive_in(p: &LaurentPoly, v: Var) -> LaurentPoly {
    let c = content(p, v);
    p.div_exact(&c).expect("content divides")
}

/// The polynomial in `y` through the given values.
fn lagrange(points: &[(BigRational, LaurentPoly)], y: Var) -> LaurentPoly {
    let yv = LaurentPoly::var(y);
    let mut out = LaurentPoly::zero();
    for (i, (ri, hi)) in points.iter().enumerate() {
        let mut basis = LaurentPoly::one();
        let mut denom = BigRational::from_integer(1.into());
        for (j, (rj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &(&yv - &LaurentPoly::constant(rj.clone()));
                denom *= ri - rj;
            }
        }
        out = &out + &(&basis * hi).scale(&denom.recip());
    }
    out
}

fn dense(p: &LaurentPoly, v: Var) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); p.degree_in(v) as usize + 1];
    for (m, c) in p.terms() {
        out[m.exponent(v) as usize] += c;
    }
    out
}

/// Upper bound for `deg_v gcd(a, b)`: the degree of the univariate gcd after
/// specializing the other variables at a point where neither leading
/// coefficient in `v` vanishes. `None` if no tried point qualifies.
fn image_gcd_degree(a: &LaurentPoly, b: &LaurentPoly, v: Var) -> Option<usize> {
    const PRIMES: [i64; 12] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    let mut others = a.vars();
    others.extend(b.vars());
    others.remove(&v);
    for shift in 0..4 {
        let point: BTreeMap<Var, BigRational> = others
            .iter()
            .enumerate()
            .map(|(i, &w)| {
                (
                    w,
                    BigRational::from_integer(PRIMES[(i + 3 * shift) % PRIMES.len()].into()),
                )
            })
            .collect();
        let (Some(ua), Some(ub)) = (specialize(a, v, &point), specialize(b, v, &point)) else {
            continue;
        };
        return Some(univariate_gcd(ua, ub).len() - 1);
    }
    None
}

/// Dense coefficients in `v` (index = degree) with the other variables
/// replaced by `point`; `None` if the leading coefficient vanishes.
fn specialize(p: &LaurentPoly, v: Var, point: &BTreeMap<Var, BigRational>) -> Option<Vec<BigRational>> {
    let deg = p.degree_in(v) as usize;
    let mut out = vec![BigRational::zero(); deg + 1];
    for (m, c) in p.terms() {
        let mut x = c.clone();
        for &(w, e) in m.pairs() {
            if w != v {
                x *= num_traits::pow(point[&w].clone(), e as usize);
            }
        }
        out[m.exponent(v) as usize] += x;
    }
    if out[deg].is_zero() {
        None
    } else {
        Some(out)
    }
}

/// Monic gcd of dense univariate polynomials over Q (both nonzero).
fn univariate_gcd(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    let trim = |p: &mut Vec<BigRational>| {
        while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !(b.len() == 1 && b[0].is_zero()) {
        let lb = b.last().expect("nonempty").clone();
        while a.len() >= b.len() && !(a.len() == 1 && a[0].is_zero()) {
            let shift = a.len() - b.len();
            let f = a.last().expect("nonempty").clone() / &lb;
            for (i, c) in b.iter().enumerate() {
                a[i + shift] -= &f * c;
            }
            a.pop();
            trim(&mut a);
            if a.is_empty() {
                a.push(BigRational::zero());
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    let lead = a.last().expect("nonempty").clone();
    a.into_iter().map(|c| c / &lead).collect()
}
