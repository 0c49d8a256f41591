//! Integrals over `M̄_{0,l}` of products of pulled-back psi classes and
//! kappa classes, by repeatedly pushing forward along the map forgetting
//! the last marked point.
//!
//! A psi factor of depth `m` on `M̄_{0,l}` is `(f^*)^m psi_{l-m}`: the psi
//! class of the point added `m` forgetful steps ago, pulled back to the top.
//! Pushing forward uses
//!
//! * `kappa_a = f^* kappa_a + psi_l^a`,
//! * `f_*(f^* X * psi_l^s) = X * kappa_{s-1}`, zero for `s = 0`,
//! * `kappa_0 = l' - 2` on `M̄_{0,l'}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Product of psi and kappa factors without its coefficient.
///
/// `psi` holds `(depth, power)` sorted by depth, `kappa` holds
/// `(index, power)` sorted by index; powers are positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MonomialKey {
    pub psi: Vec<(u32, u32)>,
    pub kappa: Vec<(u32, u32)>,
}

impl MonomialKey {
    pub fn degree(&self) -> u64 {
        let psi: u64 = self.psi.iter().map(|&(_, p)| p as u64).sum();
        let kappa: u64 = self.kappa.iter().map(|&(a, p)| a as u64 * p as u64).sum();
        psi + kappa
    }

    pub fn is_one(&self) -> bool {
        self.psi.is_empty() && self.kappa.is_empty()
    }
}

/// A coefficient times a [`MonomialKey`] on `M̄_{0,l}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TautMonomial {
    pub l: u32,
    pub key: MonomialKey,
    pub coefficient: Rational,
}

impl TautMonomial {
    /// Validates and canonicalizes the factors. `kappa_0` factors are
    /// replaced by the scalar `l - 2`.
    pub fn new(
        l: u32,
        psi: &[(u32, u32)],
        kappa: &[(u32, u32)],
        coefficient: Rational,
    ) -> Result<Self> {
        if l < 3 {
            return Err(Error::Domain(format!("M_(0,{l}) is not a stable moduli space")));
        }
        let mut coefficient = coefficient;
        let mut psi_map = BTreeMap::new();
        for &(depth, power) in psi {
            if depth + 3 > l {
                return Err(Error::Domain(format!(
                    "psi factor of depth {depth} does not exist on M_(0,{l})"
                )));
            }
            if power == 0 {
                continue;
            }
            if psi_map.insert(depth, power).is_some() {
                return Err(Error::Domain(format!("repeated psi depth {depth}")));
            }
        }
        let mut kappa_map: BTreeMap<u32, u32> = BTreeMap::new();
        for &(index, power) in kappa {
            if power == 0 {
                continue;
            }
            if index == 0 {
                let k0 = Rational::from_integer(BigInt::from(l) - 2);
                coefficient *= num_traits::pow(k0, power as usize);
            } else {
                *kappa_map.entry(index).or_default() += power;
            }
        }
        Ok(TautMonomial {
            l,
            key: MonomialKey {
                psi: psi_map.into_iter().collect(),
                kappa: kappa_map.into_iter().collect(),
            },
            coefficient,
        })
    }

    /// `((f^*)^{k-4} psi_4)^{i_4} ... psi_k^{i_k}` on `M̄_{0,k}` with
    /// `exps = [i_4, .., i_k]`.
    pub fn chain(k: u32, exps: &[u32]) -> Result<Self> {
        if k < 3 || exps.len() as u32 + 3 != k {
            return Err(Error::Domain(format!(
                "expected {} exponents for k = {k}",
                k.saturating_sub(3)
            )));
        }
        let psi: Vec<(u32, u32)> =
            exps.iter().enumerate().map(|(i, &p)| (k - 4 - i as u32, p)).collect();
        TautMonomial::new(k, &psi, &[], Rational::one())
    }

    pub fn degree(&self) -> u64 {
        self.key.degree()
    }
}

impl fmt::Display for TautMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coefficient)?;
        for &(depth, power) in self.key.psi.iter().rev() {
            let point = self.l - depth;
            let base = match depth {
                0 => format!("psi_{point}"),
                1 => format!("(f^* psi_{point})"),
                _ => format!("((f^*)^{depth} psi_{point})"),
            };
            if power == 1 {
                write!(f, " * {base}")?;
            } else {
                write!(f, " * {base}^{power}")?;
            }
        }
        for &(index, power) in &self.key.kappa {
            if power == 1 {
                write!(f, " * kappa_{index}")?;
            } else {
                write!(f, " * kappa_{index}^{power}")?;
            }
        }
        write!(f, " on M_(0,{})", self.l)
    }
}

/// Linear combination of monomials over a common `M̄_{0,l}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TautExpr {
    l: u32,
    terms: BTreeMap<MonomialKey, Rational>,
}

impl TautExpr {
    pub fn zero(l: u32) -> Self {
        TautExpr { l, terms: BTreeMap::new() }
    }

    pub fn from_monomials(l: u32, monomials: impl IntoIterator<Item = TautMonomial>) -> Result<Self> {
        let mut e = TautExpr::zero(l);
        for m in monomials {
            if m.l != l {
                return Err(Error::Domain(format!(
                    "monomial on M_(0,{}) in an expression on M_(0,{l})",
                    m.l
                )));
            }
            e.add(m.key, m.coefficient);
        }
        Ok(e)
    }

    fn add(&mut self, key: MonomialKey, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = TautMonomial> + '_ {
        self.terms.iter().map(|(k, c)| TautMonomial { l: self.l, key: k.clone(), coefficient: c.clone() })
    }

    /// `a * self + b * other`.
    pub fn combine(&self, a: &Rational, other: &TautExpr, b: &Rational) -> Result<TautExpr> {
        if self.l != other.l {
            return Err(Error::Domain("expressions on different moduli spaces".into()));
        }
        let mut out = TautExpr::zero(self.l);
        for (k, c) in &self.terms {
            out.add(k.clone(), c * a);
        }
        for (k, c) in &other.terms {
            out.add(k.clone(), c * b);
        }
        Ok(out)
    }
}

impl From<TautMonomial> for TautExpr {
    fn from(m: TautMonomial) -> Self {
        let mut e = TautExpr::zero(m.l);
        e.add(m.key, m.coefficient);
        e
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// Pushes forward along `M̄_{0,l} -> M̄_{0,l-1}`.
pub fn pushforward_step(e: &TautExpr) -> Result<TautExpr> {
    let l = e.l;
    if l <= 3 {
        return Err(Error::Domain("already on M_(0,3)".into()));
    }
    let mut out = TautExpr::zero(l - 1);
    for (key, coeff) in &e.terms {
        let psi_top = key.psi.iter().find(|&&(d, _)| d == 0).map_or(0, |&(_, p)| p);
        let lowered: Vec<(u32, u32)> =
            key.psi.iter().filter(|&&(d, _)| d > 0).map(|&(d, p)| (d - 1, p)).collect();

        // choose j_i factors psi_l^{a_i} out of each kappa_{a_i}^{p_i}
        // (psi_l power, coefficient, kappa factors kept)
        type Partial = (u32, Rational, Vec<(u32, u32)>);
        let mut partial: Vec<Partial> = vec![(psi_top, coeff.clone(), Vec::new())];
        for &(a, p) in &key.kappa {
            let mut next = Vec::with_capacity(partial.len() * (p as usize + 1));
            for (s, c, kappa) in &partial {
                for j in 0..=p {
                    let mut kappa = kappa.clone();
                    if p - j > 0 {
                        kappa.push((a, p - j));
                    }
                    let c = c * Rational::from_integer(binomial(p, j));
                    next.push((s + a * j, c, kappa));
                }
            }
            partial = next;
        }

        for (s, c, mut kappa) in partial {
            if s == 0 {
                continue;
            }
            kappa.push((s - 1, 1));
            let m = TautMonomial::new(l - 1, &lowered, &kappa, c)?;
            out.add(m.key, m.coefficient);
        }
    }
    Ok(out)
}

/// Integral over `M̄_{0,l}`.
pub fn integrate(e: &TautExpr) -> Rational {
    let dim = e.l as u64 - 3;
    let mut cur = TautExpr::zero(e.l);
    for (k, c) in &e.terms {
        if k.degree() == dim {
            cur.add(k.clone(), c.clone());
        }
    }
    while cur.l > 3 {
        cur = pushforward_step(&cur).expect("l > 3");
    }
    cur.terms.get(&MonomialKey::default()).cloned().unwrap_or_else(Rational::zero)
}

/// Integral of the chain monomial with exponents `[i_4, .., i_k]` over
/// `M̄_{0,k}`.
pub fn integrate_chain(k: u32, exps: &[u32]) -> Result<Rational> {
    Ok(integrate(&TautMonomial::chain(k, exps)?.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn mono(l: u32, psi: &[(u32, u32)], kappa: &[(u32, u32)]) -> TautExpr {
        TautMonomial::new(l, psi, kappa, int(1)).unwrap().into()
    }

    #[test]
    fn psi4_on_m04() {
        let pushed = pushforward_step(&mono(4, &[(0, 1)], &[])).unwrap();
        assert_eq!(pushed, TautMonomial::new(3, &[], &[], int(1)).unwrap().into());
    }

    #[test]
    fn pulled_psi_times_psi5() {
        let pushed = pushforward_step(&mono(5, &[(1, 1), (0, 1)], &[])).unwrap();
        assert_eq!(pushed, TautMonomial::new(4, &[(0, 1)], &[], int(2)).unwrap().into());
    }

    #[test]
    fn pullback_alone_pushes_to_zero() {
        assert!(pushforward_step(&mono(5, &[(1, 1)], &[])).unwrap().is_zero());
    }

    #[test]
    fn no_pushforward_from_m03() {
        assert!(matches!(pushforward_step(&TautExpr::zero(3)), Err(Error::Domain(_))));
    }

    #[test]
    fn small_integrals() {
        assert_eq!(integrate_chain(4, &[1]).unwrap(), int(1));
        assert_eq!(integrate_chain(5, &[1, 1]).unwrap(), int(2));
        assert_eq!(integrate_chain(5, &[0, 2]).unwrap(), int(1));
        assert_eq!(integrate_chain(3, &[]).unwrap(), int(1));
    }

    #[test]
    fn six_point_integrals() {
        assert_eq!(integrate_chain(6, &[1, 1, 1]).unwrap(), int(6));
        assert_eq!(integrate_chain(6, &[1, 0, 2]).unwrap(), int(2));
        assert_eq!(integrate_chain(6, &[0, 1, 2]).unwrap(), int(3));
        assert_eq!(integrate_chain(6, &[0, 0, 3]).unwrap(), int(1));
    }

    #[test]
    fn kappa_integrals() {
        // kappa_1 on M_(0,4) is psi_4's pushforward class, of degree one
        assert_eq!(integrate(&mono(4, &[], &[(1, 1)])), int(1));
        // kappa_1^2 on M_(0,5) equals 5 by the cycle formula
        assert_eq!(integrate(&mono(5, &[], &[(1, 2)])), int(5));
        assert_eq!(integrate(&mono(5, &[], &[(2, 1)])), int(1));
    }

    #[test]
    fn kappa0_is_scalar() {
        let m = TautMonomial::new(6, &[], &[(0, 2)], rat(1, 2)).unwrap();
        assert_eq!(m.coefficient, int(8));
        assert!(m.key.is_one());
    }

    #[test]
    fn wrong_degree_vanishes() {
        assert!(integrate(&mono(5, &[(0, 1)], &[])).is_zero());
        assert!(integrate(&mono(5, &[(0, 3)], &[])).is_zero());
    }

    #[test]
    fn invalid_monomials() {
        assert!(TautMonomial::new(5, &[(0, 1), (0, 1)], &[], int(1)).is_err());
        assert!(TautMonomial::new(4, &[(2, 1)], &[], int(1)).is_err());
        assert!(TautMonomial::chain(6, &[1, 1]).is_err());
    }

    #[test]
    fn display() {
        let m = TautMonomial::chain(6, &[1, 0, 2]).unwrap();
        assert_eq!(m.to_string(), "1 * ((f^*)^2 psi_4) * psi_6^2 on M_(0,6)");
    }
}
