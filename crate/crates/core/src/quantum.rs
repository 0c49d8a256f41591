//! Small quantum product of `P^n` to first order in `q`.
//!
//! Structure constants come from three-point invariants: degree zero gives
//! the cup product, degree one gives the `q` correction,
//! `Lambda^a * Lambda^b = sum_c <Lambda^a, Lambda^b, Lambda^c>_d kappa^{r_d} Lambda^{n-c} q^d`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{int, Rational};
use crate::invariant::Invariant;
use crate::localize::{self, Strategy};
use crate::point_sgw::mapping_to_point;

/// Power of `q`; `q^2` is not representable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QPower {
    Zero,
    One,
}

impl QPower {
    fn times(self, other: QPower) -> Option<QPower> {
        match (self, other) {
            (QPower::Zero, x) | (x, QPower::Zero) => Some(x),
            (QPower::One, QPower::One) => None,
        }
    }
}

/// Finite Laurent polynomial in `kappa`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct KappaSeries(BTreeMap<i64, Rational>);

impl KappaSeries {
    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut s = KappaSeries::default();
        s.add_term(e, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficient(&self, e: i64) -> Rational {
        self.0.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// `(exponent, coefficient)` pairs, highest exponent first.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.0.iter().rev().map(|(e, c)| (*e, c))
    }

    fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&e);
        }
    }

    fn add(&mut self, other: &KappaSeries) {
        for (e, c) in &other.0 {
            self.add_term(*e, c.clone());
        }
    }

    fn mul(&self, other: &KappaSeries) -> KappaSeries {
        let mut out = KappaSeries::default();
        for (ea, ca) in &self.0 {
            for (eb, cb) in &other.0 {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for KappaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms()
            .map(|(e, c)| if e == 0 { c.to_string() } else { format!("{c}*kappa^{e}") })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Element of `H^*(P^n)[kappa, kappa^-1][q] / (q^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QElement {
    n: u32,
    coeffs: BTreeMap<(u32, QPower), KappaSeries>,
}

impl QElement {
    pub fn zero(n: u32) -> Self {
        QElement { n, coeffs: BTreeMap::new() }
    }

    /// `Lambda^a`.
    pub fn basis(n: u32, a: u32) -> Result<Self> {
        let mut x = QElement::zero(n);
        x.add_term(a, QPower::Zero, &KappaSeries::monomial(Rational::one(), 0))?;
        Ok(x)
    }

    pub fn q(n: u32) -> Self {
        let mut x = QElement::zero(n);
        x.add_term(0, QPower::One, &KappaSeries::monomial(Rational::one(), 0)).expect("unit exists");
        x
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `series * Lambda^a * q^power`; powers of `Lambda` above `n`
    /// are rejected.
    pub fn add_term(&mut self, a: u32, power: QPower, series: &KappaSeries) -> Result<()> {
        if a > self.n {
            return Err(Error::Domain(format!("Lambda^{a} vanishes on P^{}", self.n)));
        }
        let slot = self.coeffs.entry((a, power)).or_default();
        slot.add(series);
        if slot.is_zero() {
            self.coeffs.remove(&(a, power));
        }
        Ok(())
    }

    pub fn coefficient(&self, a: u32, power: QPower) -> KappaSeries {
        self.coeffs.get(&(a, power)).cloned().unwrap_or_default()
    }

    /// `(Lambda power, q power, coefficient)` triples.
    pub fn terms(&self) -> impl Iterator<Item = (u32, QPower, &KappaSeries)> {
        self.coeffs.iter().map(|(&(a, p), s)| (a, p, s))
    }

    pub fn add(&self, other: &QElement) -> QElement {
        let mut out = self.clone();
        for (&(a, p), s) in &other.coeffs {
            out.add_term(a, p, s).expect("same n");
        }
        out
    }

    pub fn q_part(&self, power: QPower) -> QElement {
        let mut out = QElement::zero(self.n);
        for (&(a, p), s) in &self.coeffs {
            if p == power {
                out.add_term(a, p, s).expect("same n");
            }
        }
        out
    }
}

impl fmt::Display for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (&(a, p), s) in self.coeffs.iter().rev() {
            let mut factors = Vec::new();
            let is_one = s.0.len() == 1 && s.coefficient(0).is_one();
            if !is_one {
                factors.push(if s.0.len() > 1 { format!("({s})") } else { s.to_string() });
            }
            if p == QPower::One {
                factors.push("q".to_string());
            }
            match a {
                0 => {}
                1 => factors.push("L".to_string()),
                _ => factors.push(format!("L^{a}")),
            }
            if factors.is_empty() {
                factors.push("1".to_string());
            }
            parts.push(factors.join("*"));
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Three-point invariants of `P^n` in degree one, keyed by sorted triples.
#[derive(Clone, Debug)]
pub struct QuantumRing {
    n: u32,
    constants: BTreeMap<[u32; 3], Invariant>,
}

impl QuantumRing {
    pub fn new(n: u32) -> Result<Self> {
        Self::with_strategy(n, Strategy::default())
    }

    pub fn with_strategy(n: u32, strategy: Strategy) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain("n must be >= 1".into()));
        }
        let mut constants = BTreeMap::new();
        for a in 0..=n {
            for b in a..=n {
                for c in b..=n {
                    constants.insert([a, b, c], localize::invariant(n, &[a, b, c], strategy)?);
                }
            }
        }
        Ok(QuantumRing { n, constants })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `<Lambda^a, Lambda^b, Lambda^c>` in degree one.
    pub fn three_point(&self, a: u32, b: u32, c: u32) -> &Invariant {
        let mut key = [a, b, c];
        key.sort_unstable();
        &self.constants[&key]
    }

    /// `Lambda^a * Lambda^b`.
    pub fn basis_product(&self, a: u32, b: u32) -> Result<QElement> {
        let n = self.n;
        if a > n || b > n {
            return Err(Error::Domain(format!("Lambda^{} vanishes on P^{n}", a.max(b))));
        }
        let mut out = QElement::zero(n);
        // degree zero: r = 1
        for c in 0..=n {
            if let Invariant::Monomial { coeff, kappa_exp } = mapping_to_point(n, &[a, b, c])? {
                out.add_term(n - c, QPower::Zero, &KappaSeries::monomial(coeff, kappa_exp + 1))?;
            }
        }
        let rank = n as i64 + 2;
        for c in 0..=n {
            if let Invariant::Monomial { coeff, kappa_exp } = self.three_point(a, b, c) {
                out.add_term(n - c, QPower::One, &KappaSeries::monomial(coeff.clone(), kappa_exp + rank))?;
            }
        }
        Ok(out)
    }

    pub fn star(&self, x: &QElement, y: &QElement) -> Result<QElement> {
        if x.n != self.n || y.n != self.n {
            return Err(Error::Dimension("quantum product of elements over different P^n".into()));
        }
        let mut out = QElement::zero(self.n);
        for (&(a, pa), sa) in &x.coeffs {
            for (&(b, pb), sb) in &y.coeffs {
                let Some(p) = pa.times(pb) else { continue };
                let coeff = sa.mul(sb);
                for (&(c, pc), sc) in &self.basis_product(a, b)?.coeffs {
                    if let Some(total) = p.times(pc) {
                        out.add_term(c, total, &coeff.mul(sc))?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn structure_table(&self) -> StructureTable {
        let n = self.n;
        let mut rows = Vec::new();
        for a in 0..=n {
            for b in 0..=n {
                let entries = (0..=n).map(|c| (c, self.three_point(a, b, c).clone())).collect();
                rows.push(TableRow { a, b, entries });
            }
        }
        StructureTable { n, rows }
    }
}

/// `x * y` on `P^n`.
pub fn star(n: u32, x: &QElement, y: &QElement) -> Result<QElement> {
    QuantumRing::new(n)?.star(x, y)
}

pub fn structure_table(n: u32) -> Result<StructureTable> {
    Ok(QuantumRing::new(n)?.structure_table())
}

/// Pairing `g_ab = int Lambda^a Lambda^b` on `P^n` and its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    pub g: Vec<Vec<Rational>>,
    pub inverse: Vec<Vec<Rational>>,
}

impl PairingMatrix {
    pub fn new(n: u32) -> Self {
        let size = n as usize + 1;
        let g: Vec<Vec<Rational>> = (0..size)
            .map(|a| (0..size).map(|b| if a + b == n as usize { int(1) } else { int(0) }).collect())
            .collect();
        PairingMatrix { inverse: g.clone(), g }
    }

    pub fn product(&self) -> Vec<Vec<Rational>> {
        let size = self.g.len();
        (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| (0..size).map(|l| &self.g[i][l] * &self.inverse[l][j]).sum())
                    .collect()
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub a: u32,
    pub b: u32,
    #[serde(serialize_with = "ser_entries")]
    pub entries: Vec<(u32, Invariant)>,
}

fn ser_entries<S: Serializer>(entries: &[(u32, Invariant)], s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        c: u32,
        invariant: &'a Invariant,
    }
    s.collect_seq(entries.iter().map(|(c, invariant)| Entry { c: *c, invariant }))
}

/// Raw degree-one three-point invariants `<Lambda^a, Lambda^b, Lambda^c>`.
#[derive(Clone, Debug, Serialize)]
pub struct StructureTable {
    pub n: u32,
    pub rows: Vec<TableRow>,
}

impl fmt::Display for StructureTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.entries.iter().map(|(_, x)| x.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1).max(4);
        write!(f, "{:<7}", "a,b")?;
        for c in 0..=self.n {
            write!(f, " | {:<width$}", format!("c={c}"))?;
        }
        writeln!(f)?;
        for (row, cells) in self.rows.iter().zip(&cells) {
            write!(f, "{:<7}", format!("{},{}", row.a, row.b))?;
            for cell in cells {
                write!(f, " | {cell:<width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn line_square_is_q() {
        let ring = QuantumRing::new(1).unwrap();
        let l = QElement::basis(1, 1).unwrap();
        let sq = ring.star(&l, &l).unwrap();
        assert_eq!(sq, QElement::q(1));
        assert_eq!(sq.to_string(), "q");
    }

    #[test]
    fn unit_at_q0() {
        let ring = QuantumRing::new(2).unwrap();
        let one = QElement::basis(2, 0).unwrap();
        assert_eq!(ring.star(&one, &one).unwrap().q_part(QPower::Zero), one);
    }

    #[test]
    fn leading_term_is_cup_product() {
        let ring = QuantumRing::new(3).unwrap();
        for a in 0..=3 {
            for b in 0..=3 - a {
                let p = ring.basis_product(a, b).unwrap();
                assert_eq!(p.q_part(QPower::Zero), QElement::basis(3, a + b).unwrap());
            }
        }
    }

    #[test]
    fn q_squared_is_dropped() {
        let ring = QuantumRing::new(1).unwrap();
        let q = QElement::q(1);
        assert!(ring.star(&q, &q).unwrap().is_zero());
    }

    #[test]
    fn table_entries() {
        let t1 = structure_table(1).unwrap();
        let row = t1.rows.iter().find(|r| (r.a, r.b) == (1, 1)).unwrap();
        assert_eq!(row.entries, vec![(0, Invariant::Zero), (1, Invariant::new(int(1), -3))]);
        let ring2 = QuantumRing::new(2).unwrap();
        assert_eq!(ring2.three_point(2, 2, 1), &Invariant::new(int(1), -4));
        assert_eq!(ring2.three_point(2, 1, 1), &Invariant::new(rat(3, 2), -5));
    }

    #[test]
    fn pairing_inverse() {
        let p = PairingMatrix::new(3);
        let id = p.product();
        for (i, row) in id.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(*x, if i == j { int(1) } else { int(0) });
            }
        }
    }

    #[test]
    fn out_of_range_power() {
        assert!(QElement::basis(2, 3).is_err());
    }
}
