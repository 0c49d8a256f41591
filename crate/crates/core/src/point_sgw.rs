//! Super Gromov-Witten numbers of a point, and constant maps to `P^n`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::invariant::Invariant;
use crate::taut0::integrate_chain;

/// Which compositions `(i_4, .., i_k)` of `k - 3` get integrated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Enumeration {
    /// Skip compositions with `i_4 + .. + i_l > l - 3` for some `l`; those
    /// integrate to zero.
    Pruned,
    /// Every composition.
    Full,
}

/// Compositions of `k - 3` into `k - 3` nonnegative parts, in
/// lexicographic order.
pub fn compositions(k: u32, enumeration: Enumeration) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, left: u32, parts: usize, e: Enumeration, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == parts {
            if left == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let used: u32 = prefix.iter().sum();
        // prefix of length t + 1 ends at point l = t + 4
        let cap = match e {
            Enumeration::Full => left,
            Enumeration::Pruned => left.min(prefix.len() as u32 + 1 - used),
        };
        for i in 0..=cap {
            prefix.push(i);
            go(prefix, left - i, parts, e, out);
            prefix.pop();
        }
    }
    let parts = k.saturating_sub(3) as usize;
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(parts), parts as u32, parts, enumeration, &mut out);
    out
}

/// `sum over compositions` of the chain integrals.
pub fn composition_sum(k: u32, enumeration: Enumeration) -> Result<Rational> {
    let mut total = Rational::zero();
    for c in compositions(k, enumeration) {
        total += integrate_chain(k, &c)?;
    }
    Ok(total)
}

pub fn sgw_point(k: u32) -> Result<Invariant> {
    sgw_point_with(k, Enumeration::Pruned)
}

pub fn sgw_point_with(k: u32, enumeration: Enumeration) -> Result<Invariant> {
    if k < 3 {
        return Err(Error::Domain("k must be >= 3".into()));
    }
    let m = (k - 3) as usize;
    let sign = if m.is_multiple_of(2) { 1 } else { -1 };
    let prefactor = Rational::new(BigInt::from(sign), BigInt::from(2).pow(m as u32));
    let sum = composition_sum(k, enumeration)?;
    Ok(Invariant::new(prefactor * sum, 5 - 2 * k as i64))
}

/// Degree-zero invariant of `P^n` with insertions `Lambda^{a_i}`.
pub fn mapping_to_point(n: u32, classes: &[u32]) -> Result<Invariant> {
    if n < 1 {
        return Err(Error::Domain("n must be >= 1".into()));
    }
    if let Some(a) = classes.iter().find(|&&a| a > n) {
        return Err(Error::Domain(format!("class exponent {a} exceeds n = {n}")));
    }
    let k = classes.len() as u32;
    let point = sgw_point(k)?;
    let total: u32 = classes.iter().sum();
    Ok(if total == n { point } else { Invariant::Zero })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn inv(c: Rational, e: i64) -> Invariant {
        Invariant::new(c, e)
    }

    #[test]
    fn small_points() {
        assert_eq!(sgw_point(3).unwrap(), inv(rat(1, 1), -1));
        assert_eq!(sgw_point(4).unwrap(), inv(rat(-1, 2), -3));
        assert_eq!(sgw_point(5).unwrap(), inv(rat(3, 4), -5));
    }

    #[test]
    fn seven_points() {
        assert_eq!(sgw_point(7).unwrap(), inv(rat(105, 16), -9));
    }

    #[test]
    fn rejects_small_k() {
        assert_eq!(sgw_point(2), Err(Error::Domain("k must be >= 3".into())));
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(3, Enumeration::Full), vec![Vec::<u32>::new()]);
        assert_eq!(compositions(6, Enumeration::Full).len(), 10);
        let pruned = compositions(6, Enumeration::Pruned);
        assert!(pruned.iter().all(|c| c[0] <= 1 && c[0] + c[1] <= 2));
        assert_eq!(pruned.len(), 5);
    }

    #[test]
    fn constant_maps() {
        assert_eq!(mapping_to_point(2, &[1, 1, 0]).unwrap(), inv(rat(1, 1), -1));
        assert_eq!(mapping_to_point(2, &[2, 2, 2]).unwrap(), Invariant::Zero);
        assert_eq!(mapping_to_point(3, &[1, 1, 1, 0]).unwrap(), inv(rat(-1, 2), -3));
        assert!(mapping_to_point(2, &[3, 0, 0]).is_err());
    }
}
