//! Exact arithmetic: rationals, sparse polynomials in `tau_0..tau_n` and a
//! nilpotent `lambda`, rational functions, and complete homogeneous
//! symmetric polynomials.

mod dual;
mod gcd;
mod linform;
mod poly;
mod ratfunc;
mod rational;
mod symmetric;

pub use dual::Dual;
pub use gcd::poly_gcd;
pub use linform::LinForm;
pub use poly::{Monomial, Poly};
pub use ratfunc::RatFunc;
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use symmetric::{complete_homogeneous, complete_homogeneous_in};
