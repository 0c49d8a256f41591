use std::ops::{Add, Mul};

use super::{LinForm, Poly};

/// Complete homogeneous symmetric polynomial `h_c` over any commutative
/// ring, with `one` the unit of that ring.
///
/// One pass per weight: after weight `w` is absorbed, `h[j]` holds `h_j` of
/// the weights seen so far, via `h_j <- h_j + w * h_{j-1}`.
pub fn complete_homogeneous_in<R>(c: usize, weights: &[R], one: R) -> Option<R>
where
    R: Clone,
    for<'a> &'a R: Add<&'a R, Output = R> + Mul<&'a R, Output = R>,
{
    let mut h: Vec<Option<R>> = vec![None; c + 1];
    h[0] = Some(one);
    for w in weights {
        for j in 1..=c {
            if let Some(prev) = &h[j - 1] {
                let term = w * prev;
                h[j] = Some(match &h[j] {
                    Some(cur) => cur + &term,
                    None => term,
                });
            }
        }
    }
    h.pop().flatten()
}

/// `h_c(w_1, .., w_r)` as a polynomial, `lambda^2` truncated.
pub fn complete_homogeneous(c: usize, weights: &[LinForm], num_tau: usize) -> Poly {
    let polys: Vec<Poly> = weights.iter().map(LinForm::to_poly).collect();
    complete_homogeneous_in(c, &polys, Poly::one(num_tau)).unwrap_or_else(|| Poly::zero(num_tau))
}
