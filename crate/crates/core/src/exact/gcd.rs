//! Multivariate polynomial GCD over the rationals by recursive primitive
//! pseudo-remainder sequences. Only `lambda`-free inputs are accepted.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Monomial, Poly, Rational};
use crate::error::{Error, Result};

/// Greatest common divisor, normalized to coprime integer coefficients with
/// positive leading coefficient. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    if a.num_tau() != b.num_tau() {
        return Err(Error::Dimension("gcd of polynomials in different rings".into()));
    }
    if a.has_lambda() || b.has_lambda() {
        return Err(Error::Unsupported("gcd of polynomials involving lambda".into()));
    }
    Ok(gcd_rec(a, b))
}

/// Splits `p = factor * prim` with `prim` integral, primitive, and with a
/// positive leading coefficient. The zero polynomial has factor zero.
pub(crate) fn integer_primitive(p: &Poly) -> (Rational, Poly) {
    if p.is_zero() {
        return (Rational::zero(), p.clone());
    }
    let mut lcm = BigInt::one();
    let mut gcd = BigInt::zero();
    for (_, c) in p.terms() {
        lcm = lcm.lcm(c.denom());
    }
    for (_, c) in p.terms() {
        let scaled = c.numer() * (&lcm / c.denom());
        gcd = gcd.gcd(&scaled);
    }
    let mut factor = Rational::new(gcd, lcm);
    if p.leading_is_negative() {
        factor = -factor;
    }
    let prim = p.scale(&factor.recip());
    (factor, prim)
}

fn normalized(p: &Poly) -> Poly {
    integer_primitive(p).1
}

fn main_var(p: &Poly) -> Option<usize> {
    p.terms()
        .flat_map(|(m, _)| (0..m.num_tau()).filter(move |&i| m.tau_exp(i) > 0))
        .max()
}

fn deg_in(p: &Poly, v: usize) -> u32 {
    p.terms().map(|(m, _)| m.tau_exp(v)).max().unwrap_or(0)
}

fn coeffs_in(p: &Poly, v: usize) -> BTreeMap<u32, Poly> {
    let n = p.num_tau();
    let mut out: BTreeMap<u32, Vec<(Monomial, Rational)>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut exps = m.exponents().to_vec();
        let e = std::mem::replace(&mut exps[v], 0);
        out.entry(e).or_default().push((Monomial::from_exponents(exps), c.clone()));
    }
    out.into_iter()
        .map(|(e, terms)| (e, Poly::from_terms(n, terms).expect("same ring")))
        .collect()
}

fn var_pow(n: usize, v: usize, e: u32) -> Poly {
    let mut exps = vec![0; n + 1];
    exps[v] = e;
    Poly::monomial(Monomial::from_exponents(exps), Rational::one())
}

fn content_in(p: &Poly, v: usize) -> Poly {
    let mut g = Poly::zero(p.num_tau());
    for c in coeffs_in(p, v).values() {
        g = gcd_rec(&g, c);
        if g.as_constant().is_some() {
            break;
        }
    }
    g
}

fn primitive_in(p: &Poly, v: usize) -> Poly {
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides")
}

fn pseudo_rem(a: &Poly, b: &Poly, v: usize) -> Poly {
    let n = a.num_tau();
    let db = deg_in(b, v);
    let lcb = coeffs_in(b, v).remove(&db).expect("leading coefficient");
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = deg_in(&r, v);
        if dr < db {
            break;
        }
        let lcr = coeffs_in(&r, v).remove(&dr).expect("leading coefficient");
        let shift = &lcr * &var_pow(n, v, dr - db);
        r = &(&lcb * &r) - &(&shift * b);
        // keep coefficient growth in check; scalars do not change the gcd
        r = normalized(&r);
    }
    r
}

/// Exponent-wise minimum over all terms; the largest monomial dividing `p`.
fn monomial_content(p: &Poly) -> Vec<u32> {
    let n = p.num_tau();
    let mut min: Option<Vec<u32>> = None;
    for (m, _) in p.terms() {
        let e: Vec<u32> = (0..n).map(|i| m.tau_exp(i)).collect();
        min = Some(match min {
            None => e,
            Some(cur) => cur.iter().zip(&e).map(|(x, y)| *x.min(y)).collect(),
        });
    }
    min.unwrap_or_else(|| vec![0; n])
}

fn tau_monomial(exps: &[u32]) -> Poly {
    let mut e = exps.to_vec();
    e.push(0);
    Poly::monomial(Monomial::from_exponents(e), Rational::one())
}

/// Dense univariate image in `v` after substituting `point` for the rest.
fn univariate_image(p: &Poly, v: usize, point: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); deg_in(p, v) as usize + 1];
    for (m, c) in p.terms() {
        let mut x = c.clone();
        for (i, t) in point.iter().enumerate() {
            if i != v {
                x *= num_traits::pow(t.clone(), m.tau_exp(i) as usize);
            }
        }
        out[m.tau_exp(v) as usize] += x;
    }
    out
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn univariate_gcd_degree(mut a: Vec<Rational>, mut b: Vec<Rational>) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        while a.len() >= b.len() {
            let q = a.last().unwrap() / b.last().unwrap();
            let shift = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                a[shift + i] -= &q * c;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True when the gcd is certainly constant: for every variable some
/// evaluation of the others keeps both degrees and has coprime images, and
/// the image gcd degree bounds the true one from above.
fn coprime_by_images(a: &Poly, b: &Poly) -> bool {
    const POINTS: [i64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];
    let n = a.num_tau();
    (0..n).all(|v| {
        let (da, db) = (deg_in(a, v) as usize, deg_in(b, v) as usize);
        if da == 0 || db == 0 {
            return true;
        }
        (0..3).any(|attempt| {
            let point: Vec<Rational> =
                (0..n).map(|i| Rational::from_integer(POINTS[(i + attempt * 3) % POINTS.len()].into())).collect();
            let (ia, ib) = (univariate_image(a, v, &point), univariate_image(b, v, &point));
            !ia[da].is_zero() && !ib[db].is_zero() && univariate_gcd_degree(ia, ib) == 0
        })
    })
}

fn gcd_rec(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return normalized(b);
    }
    if b.is_zero() {
        return normalized(a);
    }
    let n = a.num_tau();
    let (ma, mb) = (monomial_content(a), monomial_content(b));
    let shared: Vec<u32> = ma.iter().zip(&mb).map(|(x, y)| *x.min(y)).collect();
    if ma.iter().chain(&mb).any(|&e| e > 0) {
        let a = a.div_exact(&tau_monomial(&ma)).expect("monomial content divides");
        let b = b.div_exact(&tau_monomial(&mb)).expect("monomial content divides");
        return &tau_monomial(&shared) * &gcd_rec(&a, &b);
    }
    if coprime_by_images(a, b) {
        return Poly::one(n);
    }
    let v = match main_var(a).max(main_var(b)) {
        None => return Poly::one(n),
        Some(v) => v,
    };
    if deg_in(a, v) == 0 {
        return gcd_rec(a, &content_in(b, v));
    }
    if deg_in(b, v) == 0 {
        return gcd_rec(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let content = gcd_rec(&ca, &cb);
    let mut pa = a.div_exact(&ca).expect("content divides");
    let mut pb = b.div_exact(&cb).expect("content divides");
    if deg_in(&pa, v) < deg_in(&pb, v) {
        std::mem::swap(&mut pa, &mut pb);
    }
    loop {
        let r = pseudo_rem(&pa, &pb, v);
        if r.is_zero() {
            break;
        }
        if deg_in(&r, v) == 0 {
            pb = Poly::one(n);
            break;
        }
        pa = pb;
        pb = primitive_in(&r, v);
    }
    normalized(&(&content * &primitive_in(&pb, v)))
}
