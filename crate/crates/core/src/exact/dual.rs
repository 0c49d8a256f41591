use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;

/// `re + eps * lambda` with `lambda^2 = 0`: a polynomial whose `tau`
/// variables have been substituted by numbers.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Dual {
    pub re: Rational,
    pub eps: Rational,
}

impl Dual {
    pub fn new(re: Rational, eps: Rational) -> Self {
        Dual { re, eps }
    }

    pub fn real(re: Rational) -> Self {
        Dual { re, eps: Rational::zero() }
    }

    pub fn one() -> Self {
        Dual::real(Rational::one())
    }

    pub fn zero() -> Self {
        Dual::default()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.eps.is_zero()
    }

    pub fn scale(&self, s: &Rational) -> Dual {
        Dual { re: &self.re * s, eps: &self.eps * s }
    }

    /// Inverse, defined whenever the real part is nonzero.
    pub fn inverse(&self) -> Option<Dual> {
        if self.re.is_zero() {
            return None;
        }
        let inv = self.re.recip();
        let eps = -(&self.eps * &inv * &inv);
        Some(Dual { re: inv, eps })
    }
}

impl<'a> Add<&'a Dual> for &'a Dual {
    type Output = Dual;
    fn add(self, rhs: &'a Dual) -> Dual {
        Dual { re: &self.re + &rhs.re, eps: &self.eps + &rhs.eps }
    }
}

impl<'a> Sub<&'a Dual> for &'a Dual {
    type Output = Dual;
    fn sub(self, rhs: &'a Dual) -> Dual {
        Dual { re: &self.re - &rhs.re, eps: &self.eps - &rhs.eps }
    }
}

impl<'a> Mul<&'a Dual> for &'a Dual {
    type Output = Dual;
    fn mul(self, rhs: &'a Dual) -> Dual {
        Dual {
            re: &self.re * &rhs.re,
            eps: &self.re * &rhs.eps + &self.eps * &rhs.re,
        }
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual { re: -self.re, eps: -self.eps }
    }
}

impl fmt::Display for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*lambda", self.re, self.eps)
    }
}
