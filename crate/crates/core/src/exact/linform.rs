use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::{Dual, Poly, Rational};
use crate::error::{Error, Result};

/// Homogeneous linear form `sum_i c_i tau_i + c_lambda * lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinForm {
    tau: Vec<Rational>,
    lambda: Rational,
}

impl LinForm {
    pub fn zero(num_tau: usize) -> Self {
        LinForm { tau: vec![Rational::zero(); num_tau], lambda: Rational::zero() }
    }

    pub fn tau(num_tau: usize, i: usize) -> Self {
        let mut f = LinForm::zero(num_tau);
        f.tau[i] = Rational::one();
        f
    }

    pub fn lambda(num_tau: usize) -> Self {
        let mut f = LinForm::zero(num_tau);
        f.lambda = Rational::one();
        f
    }

    pub fn from_coeffs(tau: Vec<Rational>, lambda: Rational) -> Self {
        LinForm { tau, lambda }
    }

    pub fn num_tau(&self) -> usize {
        self.tau.len()
    }

    pub fn tau_coeff(&self, i: usize) -> &Rational {
        &self.tau[i]
    }

    pub fn tau_coeffs(&self) -> &[Rational] {
        &self.tau
    }

    pub fn lambda_coeff(&self) -> &Rational {
        &self.lambda
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.is_zero() && self.tau.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> LinForm {
        LinForm {
            tau: self.tau.iter().map(|c| c * s).collect(),
            lambda: &self.lambda * s,
        }
    }

    pub fn to_poly(&self) -> Poly {
        let n = self.num_tau();
        let mut p = Poly::lambda(n).scale(&self.lambda);
        for (i, c) in self.tau.iter().enumerate() {
            if !c.is_zero() {
                p = &p + &Poly::tau(n, i).scale(c);
            }
        }
        p
    }

    pub fn eval(&self, tau: &[Rational]) -> Result<Dual> {
        if tau.len() != self.num_tau() {
            return Err(Error::Dimension(format!(
                "{} values for {} tau variables",
                tau.len(),
                self.num_tau()
            )));
        }
        let re = self.tau.iter().zip(tau).map(|(c, t)| c * t).sum();
        Ok(Dual::new(re, self.lambda.clone()))
    }
}

impl<'a> Add<&'a LinForm> for &'a LinForm {
    type Output = LinForm;
    fn add(self, rhs: &'a LinForm) -> LinForm {
        assert_eq!(self.num_tau(), rhs.num_tau(), "linear form dimension mismatch");
        LinForm {
            tau: self.tau.iter().zip(&rhs.tau).map(|(a, b)| a + b).collect(),
            lambda: &self.lambda + &rhs.lambda,
        }
    }
}

impl<'a> Sub<&'a LinForm> for &'a LinForm {
    type Output = LinForm;
    fn sub(self, rhs: &'a LinForm) -> LinForm {
        self + &(-rhs)
    }
}

impl Neg for &LinForm {
    type Output = LinForm;
    fn neg(self) -> LinForm {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_poly().fmt(f)
    }
}
