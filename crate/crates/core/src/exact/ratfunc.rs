use std::fmt;

use num_traits::{One, Zero};

use super::gcd::{integer_primitive, poly_gcd};
use super::{Dual, Poly, Rational};
use crate::error::{Error, Result};

/// Rings with at most this many `tau` variables get full GCD cancellation.
const GCD_MAX_VARS: usize = 3;

/// Quotient `num / den` with a `lambda`-free denominator.
///
/// Canonical form: integer coefficients without common content, positive
/// leading coefficient in `den`, and for small rings no common polynomial
/// factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if num.num_tau() != den.num_tau() {
            return Err(Error::Dimension("numerator and denominator in different rings".into()));
        }
        if den.is_zero() {
            return Err(Error::Arithmetic("zero denominator".into()));
        }
        if den.has_lambda() {
            return Err(Error::Arithmetic(format!("denominator {den} involves lambda")));
        }
        Ok(Self::normalize(num, den))
    }

    pub fn from_poly(p: Poly) -> Self {
        let n = p.num_tau();
        Self::normalize(p, Poly::one(n))
    }

    pub fn constant(num_tau: usize, c: Rational) -> Self {
        Self::from_poly(Poly::constant(num_tau, c))
    }

    pub fn zero(num_tau: usize) -> Self {
        RatFunc { num: Poly::zero(num_tau), den: Poly::one(num_tau) }
    }

    pub fn one(num_tau: usize) -> Self {
        RatFunc { num: Poly::one(num_tau), den: Poly::one(num_tau) }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn num_tau(&self) -> usize {
        self.num.num_tau()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(mut num: Poly, mut den: Poly) -> Self {
        let n = num.num_tau();
        if num.is_zero() {
            return RatFunc::zero(n);
        }
        if n <= GCD_MAX_VARS {
            let (n0, n1) = num.split_lambda();
            let mut g = poly_gcd(&den, &n0).expect("lambda-free operands");
            if !n1.is_zero() {
                g = poly_gcd(&g, &n1).expect("lambda-free operands");
            }
            if g.as_constant().is_none() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let (fnum, pnum) = integer_primitive(&num);
        let (fden, pden) = integer_primitive(&den);
        let s = fnum / fden;
        RatFunc {
            num: pnum.scale(&Rational::from_integer(s.numer().clone())),
            den: pden.scale(&Rational::from_integer(s.denom().clone())),
        }
    }

    fn check_dim(&self, other: &RatFunc) -> Result<()> {
        if self.num_tau() == other.num_tau() {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "rational functions in {} and {} tau variables",
                self.num_tau(),
                other.num_tau()
            )))
        }
    }

    pub fn try_add(&self, other: &RatFunc) -> Result<RatFunc> {
        self.check_dim(other)?;
        if self.den == other.den {
            return Ok(Self::normalize(&self.num + &other.num, self.den.clone()));
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Ok(Self::normalize(num, &self.den * &other.den))
    }

    pub fn try_sub(&self, other: &RatFunc) -> Result<RatFunc> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &RatFunc) -> Result<RatFunc> {
        self.check_dim(other)?;
        Ok(Self::normalize(&self.num * &other.num, &self.den * &other.den))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn scale(&self, s: &Rational) -> RatFunc {
        Self::normalize(self.num.scale(s), self.den.clone())
    }

    /// `1 / (N0 + N1 lambda) = (N0 - N1 lambda) / N0^2`.
    pub fn inverse(&self) -> Result<RatFunc> {
        let (n0, n1) = self.num.split_lambda();
        if n0.is_zero() {
            return Err(Error::Arithmetic(format!("{self} is not invertible")));
        }
        let lam = Poly::lambda(self.num_tau());
        let conj = &n0 - &(&n1 * &lam);
        Ok(Self::normalize(&self.den * &conj, &n0 * &n0))
    }

    pub fn as_constant(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn lambda_free_part(&self) -> RatFunc {
        Self::normalize(self.num.split_lambda().0, self.den.clone())
    }

    /// Coefficient of `lambda`.
    pub fn lambda_coefficient(&self) -> RatFunc {
        Self::normalize(self.num.split_lambda().1, self.den.clone())
    }

    pub fn eval(&self, tau: &[Rational]) -> Result<Dual> {
        let d = self.den.eval_dual(tau)?;
        if d.re.is_zero() {
            return Err(Error::Arithmetic(format!("denominator {} vanishes", self.den)));
        }
        let n = self.num.eval_dual(tau)?;
        Ok(n.scale(&d.re.recip()))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn t(i: usize) -> Poly {
        Poly::tau(2, i)
    }

    fn frac(n: Poly, d: Poly) -> RatFunc {
        RatFunc::new(n, d).unwrap()
    }

    #[test]
    fn opposite_denominators_cancel() {
        let one = Poly::one(2);
        let a = frac(one.clone(), &t(1) - &t(0));
        let b = frac(one, &t(0) - &t(1));
        assert!(a.try_add(&b).unwrap().is_zero());
    }

    #[test]
    fn one_point_line_sum() {
        let a = frac(t(1), &t(1) - &t(0));
        let b = frac(t(0), &t(0) - &t(1));
        assert_eq!(a.try_add(&b).unwrap().as_constant(), Some(int(1)));
    }

    #[test]
    fn x_over_y_times_inverse() {
        let a = frac(&t(0) + &Poly::constant(2, int(2)), &t(1) * &t(1));
        let b = a.inverse().unwrap();
        assert_eq!(a.try_mul(&b).unwrap(), RatFunc::one(2));
    }

    #[test]
    fn lambda_numerator_inverse() {
        let lam = Poly::lambda(2);
        let a = frac(&(&t(0) - &t(1)) + &lam, Poly::one(2));
        let prod = a.try_mul(&a.inverse().unwrap()).unwrap();
        assert_eq!(prod, RatFunc::one(2));
    }

    #[test]
    fn rejects_bad_denominators() {
        assert!(matches!(RatFunc::new(t(0), Poly::zero(2)), Err(Error::Arithmetic(_))));
        assert!(matches!(RatFunc::new(t(0), Poly::lambda(2)), Err(Error::Arithmetic(_))));
    }

    #[test]
    fn canonical_form() {
        let a = frac(t(0).scale(&rat(1, 2)), (&t(0) * &t(1)).scale(&int(-3)));
        assert_eq!(a.to_string(), "(-1) / (6*tau1)");
        assert_eq!(a.eval(&[int(1), int(2)]).unwrap(), Dual::real(rat(-1, 12)));
    }

    #[test]
    fn lambda_parts() {
        let lam = Poly::lambda(2);
        let a = frac(&t(0) + &(&lam * &t(1)), &t(0) - &t(1));
        assert_eq!(a.lambda_coefficient(), frac(t(1), &t(0) - &t(1)));
        assert_eq!(a.lambda_free_part(), frac(t(0), &t(0) - &t(1)));
    }
}
