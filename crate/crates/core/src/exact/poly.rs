use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Dual, Rational};
use crate::error::{Error, Result};

/// Exponent vector `(e_0, .., e_n, e_lambda)`.
///
/// Ordered graded-lexicographically with `tau_0 < tau_1 < .. < tau_n < lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(num_tau: usize) -> Self {
        Monomial(vec![0; num_tau + 1])
    }

    /// `exps` holds the `tau` exponents followed by the `lambda` exponent.
    pub fn from_exponents(exps: Vec<u32>) -> Self {
        assert!(!exps.is_empty(), "a monomial needs at least the lambda slot");
        Monomial(exps)
    }

    pub fn num_tau(&self) -> usize {
        self.0.len() - 1
    }

    pub fn tau_exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn lambda_exp(&self) -> u32 {
        *self.0.last().unwrap()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when every exponent allows it.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `tau_0..tau_{num_tau-1}` and `lambda`, with
/// `lambda^2 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    num_tau: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(num_tau: usize) -> Self {
        Poly { num_tau, terms: BTreeMap::new() }
    }

    pub fn one(num_tau: usize) -> Self {
        Poly::constant(num_tau, Rational::one())
    }

    pub fn constant(num_tau: usize, c: Rational) -> Self {
        Poly::monomial(Monomial::one(num_tau), c)
    }

    pub fn tau(num_tau: usize, i: usize) -> Self {
        assert!(i < num_tau, "tau_{i} out of range for {num_tau} variables");
        let mut exps = vec![0; num_tau + 1];
        exps[i] = 1;
        Poly::monomial(Monomial(exps), Rational::one())
    }

    pub fn lambda(num_tau: usize) -> Self {
        let mut exps = vec![0; num_tau + 1];
        exps[num_tau] = 1;
        Poly::monomial(Monomial(exps), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let num_tau = m.num_tau();
        let mut p = Poly::zero(num_tau);
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zero coefficients and `lambda^2` multiples.
    pub fn from_terms(
        num_tau: usize,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Result<Self> {
        let mut p = Poly::zero(num_tau);
        for (m, c) in terms {
            if m.num_tau() != num_tau {
                return Err(Error::Dimension(format!(
                    "monomial with {} tau variables in a ring with {num_tau}",
                    m.num_tau()
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if m.lambda_exp() >= 2 || c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn num_tau(&self) -> usize {
        self.num_tau
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    /// The value if this polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn has_lambda(&self) -> bool {
        self.terms.keys().any(|m| m.lambda_exp() > 0)
    }

    /// Splits `p = p0 + p1 * lambda` into `(p0, p1)`.
    pub fn split_lambda(&self) -> (Poly, Poly) {
        let mut p0 = Poly::zero(self.num_tau);
        let mut p1 = Poly::zero(self.num_tau);
        for (m, c) in &self.terms {
            if m.lambda_exp() == 0 {
                p0.terms.insert(m.clone(), c.clone());
            } else {
                let mut exps = m.0.clone();
                exps[self.num_tau] = 0;
                p1.terms.insert(Monomial(exps), c.clone());
            }
        }
        (p0, p1)
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.num_tau);
        }
        Poly {
            num_tau: self.num_tau,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    fn check_dim(&self, other: &Poly) -> Result<()> {
        if self.num_tau == other.num_tau {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "polynomials in {} and {} tau variables",
                self.num_tau, other.num_tau
            )))
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    /// Product with every `lambda^2` term discarded.
    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_dim(other)?;
        let mut out = Poly::zero(self.num_tau);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.lambda_exp() + mb.lambda_exp() >= 2 {
                    continue;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one(self.num_tau);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Substitutes numbers for every variable, `lambda` included.
    pub fn eval(&self, tau: &[Rational], lambda: &Rational) -> Result<Rational> {
        let d = self.eval_dual(tau)?;
        Ok(d.re + d.eps * lambda)
    }

    /// Substitutes numbers for the `tau` variables, keeping `lambda`.
    pub fn eval_dual(&self, tau: &[Rational]) -> Result<Dual> {
        if tau.len() != self.num_tau {
            return Err(Error::Dimension(format!(
                "{} values for {} tau variables",
                tau.len(),
                self.num_tau
            )));
        }
        let mut out = Dual::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (t, &e) in tau.iter().zip(&m.0) {
                if e > 0 {
                    v *= num_traits::pow(t.clone(), e as usize);
                }
            }
            if m.lambda_exp() == 0 {
                out.re += v;
            } else {
                out.eps += v;
            }
        }
        Ok(out)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.num_tau);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(lm)?;
            let qc = c / lc;
            let t = Poly::monomial(qm.clone(), qc.clone());
            rem = &rem - &(&t * divisor);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Sign of the leading coefficient (zero polynomial counts as positive).
    pub fn leading_is_negative(&self) -> bool {
        self.leading_term().is_some_and(|(_, c)| c.is_negative())
    }

    /// Text form under the fixed monomial order, leading term first.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    let n = m.num_tau();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if i == n {
            f.write_str("lambda")?;
        } else {
            write!(f, "tau{i}")?;
        }
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.try_add(rhs).expect("polynomial dimension mismatch")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.try_sub(rhs).expect("polynomial dimension mismatch")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.try_mul(rhs).expect("polynomial dimension mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn t(i: usize) -> Poly {
        Poly::tau(2, i)
    }

    #[test]
    fn monomial_product() {
        assert_eq!((&t(0) * &t(1)).to_string(), "tau0*tau1");
    }

    #[test]
    fn lambda_squared_vanishes() {
        let l = Poly::lambda(2);
        assert!((&l * &l).is_zero());
        let x = &l + &t(0);
        assert_eq!((&x * &x).to_string(), "2*tau0*lambda + tau0^2");
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&t(0) - &t(1)) * &(&t(0) + &t(1));
        assert_eq!(p, &t(0).pow(2) - &t(1).pow(2));
        assert_eq!(p.to_string(), "-tau1^2 + tau0^2");
    }

    #[test]
    fn grlex_order() {
        let m = |v: Vec<u32>| Monomial::from_exponents(v);
        assert!(m(vec![0, 0, 1]) > m(vec![0, 1, 0]));
        assert!(m(vec![0, 1, 0]) > m(vec![1, 0, 0]));
        assert!(m(vec![2, 0, 0]) > m(vec![0, 0, 1]));
        assert!(m(vec![0, 2, 0]) > m(vec![1, 1, 0]));
        assert!(m(vec![1, 0, 1]) > m(vec![0, 2, 0]));
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(Poly::tau(2, 0).try_mul(&Poly::tau(3, 0)), Err(Error::Dimension(_))));
    }

    #[test]
    fn evaluation() {
        let p = &t(1) - &t(0);
        assert_eq!(p.eval(&[int(0), int(1)], &int(0)).unwrap(), int(1));
        let q = &t(0) * &t(1);
        assert_eq!(q.eval(&[rat(2, 3), int(3)], &int(0)).unwrap(), int(2));
        assert!(Poly::lambda(2).eval(&[int(5), int(7)], &int(0)).unwrap().is_zero());
    }

    #[test]
    fn exact_division() {
        let a = &t(0) - &t(1);
        let b = &(&t(0) + &Poly::lambda(2)) * &t(1);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(t(0).div_exact(&t(1)).is_none());
    }

    #[test]
    fn display_coefficients() {
        let p = &(&t(0).scale(&rat(-3, 2)) + &Poly::constant(2, int(1))) + &Poly::lambda(2);
        assert_eq!(p.to_string(), "lambda - 3/2*tau0 + 1");
    }
}
