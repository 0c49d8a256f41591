//! Torus-fixed loci of degree-one maps to `P^n` with up to three marked
//! points, and the equivariant data attached to each.
//!
//! A fixed locus is a cover of the coordinate line through the fixed points
//! `q_a` and `q_b`, with the marked points in `A` sitting over `q_a` and the
//! others over `q_b`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{int, Dual, LinForm, Poly, RatFunc, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedGraph {
    pub n: u32,
    pub d: u32,
    pub a: u32,
    pub b: u32,
    pub k: u32,
    /// Bit `i - 1` set when marked point `i` lies over `q_a`.
    pub marks_at_a: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuliKind {
    Point,
    M04,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GraphGeometry {
    pub moduli_kind: ModuliKind,
}

impl GraphGeometry {
    pub fn has_lambda(&self) -> bool {
        self.moduli_kind == ModuliKind::M04
    }
}

/// Where the marked points sit relative to the two ends of the edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeMarking {
    NoMark,
    MarkAtA,
    MarksAtBoth,
}

impl FixedGraph {
    pub fn new(n: u32, d: u32, a: u32, b: u32, k: u32, marks_at_a: &[u32]) -> Result<Self> {
        if a >= b || b > n {
            return Err(Error::Domain(format!("need 0 <= a < b <= n, got a = {a}, b = {b}, n = {n}")));
        }
        if k > 8 {
            return Err(Error::Unsupported(format!("{k} marked points")));
        }
        let mut mask = 0u8;
        for &i in marks_at_a {
            if i == 0 || i > k {
                return Err(Error::Domain(format!("marked point {i} not in 1..={k}")));
            }
            mask |= 1 << (i - 1);
        }
        Ok(FixedGraph { n, d, a, b, k, marks_at_a: mask })
    }

    pub fn num_tau(&self) -> usize {
        self.n as usize + 1
    }

    /// Sorted marked points lying over `q_a`.
    pub fn marks_a(&self) -> Vec<u32> {
        (1..=self.k).filter(|&i| self.is_at_a(i)).collect()
    }

    pub fn is_at_a(&self, i: u32) -> bool {
        self.marks_at_a & (1 << (i - 1)) != 0
    }

    pub fn count_at_a(&self) -> u32 {
        self.marks_at_a.count_ones()
    }

    /// Fixed point that marked point `i` maps to.
    pub fn image(&self, i: u32) -> u32 {
        if self.is_at_a(i) {
            self.a
        } else {
            self.b
        }
    }

    pub fn geometry(&self) -> GraphGeometry {
        let full = self.count_at_a();
        let moduli_kind = if self.k == 3 && (full == 0 || full == 3) {
            ModuliKind::M04
        } else {
            ModuliKind::Point
        };
        GraphGeometry { moduli_kind }
    }

    pub fn edge_marking(&self) -> EdgeMarking {
        let at_a = self.count_at_a();
        if at_a == 0 {
            EdgeMarking::NoMark
        } else if at_a == self.k {
            EdgeMarking::MarkAtA
        } else {
            EdgeMarking::MarksAtBoth
        }
    }
}

impl fmt::Display for FixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marks: Vec<String> = self.marks_a().iter().map(u32::to_string).collect();
        write!(
            f,
            "G(k={},d={},a={},b={},A={{{}}})",
            self.k,
            self.d,
            self.a,
            self.b,
            marks.join(",")
        )
    }
}

impl Serialize for FixedGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All degree-one fixed loci, ordered by `a`, then `b`, then the bitmask of
/// `A`.
pub fn enumerate(n: u32, k: u32) -> Result<Vec<FixedGraph>> {
    if !(1..=3).contains(&k) {
        return Err(Error::Unsupported(format!("localization with k = {k} marked points")));
    }
    if n < 1 {
        return Err(Error::Domain("n must be >= 1".into()));
    }
    let mut out = Vec::with_capacity(((n * (n + 1) / 2) as usize) << k);
    for a in 0..=n {
        for b in a + 1..=n {
            for mask in 0..(1u8 << k) {
                out.push(FixedGraph { n, d: 1, a, b, k, marks_at_a: mask });
            }
        }
    }
    Ok(out)
}

fn tau_diff(num_tau: usize, i: u32, j: u32) -> LinForm {
    &LinForm::tau(num_tau, i as usize) - &LinForm::tau(num_tau, j as usize)
}

/// Weights of the odd normal bundle over a single-edge degree-`d` locus.
pub fn single_edge_weights(n: u32, d: u32, a: u32, b: u32, config: EdgeMarking) -> Result<Vec<LinForm>> {
    if a >= b || b > n {
        return Err(Error::Domain(format!("need 0 <= a < b <= n, got a = {a}, b = {b}, n = {n}")));
    }
    if d == 0 {
        return Err(Error::Domain("degree must be positive".into()));
    }
    let nt = n as usize + 1;
    let dd = 2 * d as i64;
    let ab = tau_diff(nt, a, b);
    let skip = match config {
        EdgeMarking::MarksAtBoth => None,
        EdgeMarking::MarkAtA => Some(d),
        EdgeMarking::NoMark => Some(d - 1),
    };
    let mut out = Vec::new();
    for q in 0..2 * d {
        if Some(q) == skip {
            continue;
        }
        let c = Rational::new((dd - 2 * q as i64 - 1).into(), dd.into());
        out.push(ab.scale(&c));
    }
    let ta = LinForm::tau(nt, a as usize);
    let tb = LinForm::tau(nt, b as usize);
    for m in (0..=n).filter(|&m| m != a && m != b) {
        for q in 0..d as i64 {
            let ca = Rational::new((2 * q - 1).into(), dd.into());
            let cb = Rational::new((dd - 2 * q - 1).into(), dd.into());
            let w = &(&ta.scale(&ca) - &tb.scale(&cb)) + &LinForm::tau(nt, m as usize);
            out.push(w);
        }
    }
    Ok(out)
}

/// The inverse Euler class of the normal bundle of a fixed locus, kept
/// factored: `numerator / prod(denominator)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtInverse {
    /// Linear in `lambda`.
    pub numerator: Poly,
    /// `lambda`-free linear factors.
    pub denominator: Vec<LinForm>,
}

impl EtInverse {
    pub fn to_ratfunc(&self) -> RatFunc {
        let nt = self.numerator.num_tau();
        let den = self.denominator.iter().fold(Poly::one(nt), |acc, f| &acc * &f.to_poly());
        RatFunc::new(self.numerator.clone(), den).expect("nonzero lambda-free denominator")
    }

    /// Value at `tau`; `None` when a denominator factor vanishes.
    pub fn eval(&self, tau: &[Rational]) -> Result<Option<Dual>> {
        let mut den = Rational::one();
        for f in &self.denominator {
            den *= f.eval(tau)?.re;
        }
        if den.is_zero() {
            return Ok(None);
        }
        Ok(Some(self.numerator.eval_dual(tau)?.scale(&den.recip())))
    }

    pub fn has_lambda(&self) -> bool {
        self.numerator.has_lambda()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerData {
    pub susy_weights: Vec<LinForm>,
    pub et_inverse: EtInverse,
}

pub fn euler_data(g: &FixedGraph) -> Result<EulerData> {
    if g.d != 1 || !(1..=3).contains(&g.k) {
        return Err(Error::Unsupported(format!("Euler data for k = {}, d = {}", g.k, g.d)));
    }
    let nt = g.num_tau();
    let (a, b) = (g.a, g.b);
    let at_a = g.count_at_a();

    let mut weights = single_edge_weights(g.n, 1, a, b, g.edge_marking())?;
    match (g.k, at_a) {
        (2, 0) | (2, 2) | (3, 1) | (3, 2) => weights.push(LinForm::zero(nt)),
        (3, 0) | (3, 3) => {
            weights.push(LinForm::zero(nt));
            weights.push(LinForm::lambda(nt).scale(&Rational::new((-1).into(), 2.into())));
        }
        _ => {}
    }

    let others = || (0..=g.n).filter(move |&j| j != a && j != b);
    let q_factors = others().flat_map(|j| [tau_diff(nt, a, j), tau_diff(nt, b, j)]);
    // prod_{j != a} (tau_a - tau_j) * prod_{j != b} (tau_b - tau_j)
    let p_factors = || {
        [tau_diff(nt, a, b), tau_diff(nt, b, a)]
            .into_iter()
            .chain(others().flat_map(|j| [tau_diff(nt, a, j), tau_diff(nt, b, j)]))
    };
    let one = Poly::one(nt);
    let lam = Poly::lambda(nt);
    let diff = |i: u32, j: u32| tau_diff(nt, i, j).to_poly();

    let (numerator, denominator): (Poly, Vec<LinForm>) = match (g.k, at_a) {
        (1, 0) => (one, std::iter::once(tau_diff(nt, b, a)).chain(q_factors).collect()),
        (1, _) => (one, std::iter::once(tau_diff(nt, a, b)).chain(q_factors).collect()),
        (2, 1) => (one, p_factors().collect()),
        (2, _) => (one.scale(&int(-1)), p_factors().collect()),
        (3, 0) => (&diff(a, b) - &lam, std::iter::once(tau_diff(nt, b, a)).chain(p_factors()).collect()),
        (3, 3) => (&diff(b, a) - &lam, std::iter::once(tau_diff(nt, a, b)).chain(p_factors()).collect()),
        (3, 1) => (one, std::iter::once(tau_diff(nt, b, a)).chain(p_factors()).collect()),
        (3, _) => (one, std::iter::once(tau_diff(nt, a, b)).chain(p_factors()).collect()),
        _ => unreachable!("k checked above"),
    };
    Ok(EulerData { susy_weights: weights, et_inverse: EtInverse { numerator, denominator } })
}

/// `prod_i tau_{image(i)}^{a_i}`.
pub fn ev_pullback(g: &FixedGraph, classes: &[u32]) -> Result<Poly> {
    if classes.len() != g.k as usize {
        return Err(Error::Domain(format!("{} classes for {} marked points", classes.len(), g.k)));
    }
    let nt = g.num_tau();
    let mut out = Poly::one(nt);
    for (i, &e) in classes.iter().enumerate() {
        if e > g.n {
            return Err(Error::Domain(format!("class exponent {e} exceeds n = {}", g.n)));
        }
        out = &out * &Poly::tau(nt, g.image(i as u32 + 1) as usize).pow(e);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn graph(n: u32, k: u32, a: u32, b: u32, marks: &[u32]) -> FixedGraph {
        FixedGraph::new(n, 1, a, b, k, marks).unwrap()
    }

    fn half_diff(nt: usize, i: u32, j: u32) -> LinForm {
        tau_diff(nt, i, j).scale(&rat(1, 2))
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate(1, 1).unwrap().len(), 2);
        assert_eq!(enumerate(1, 3).unwrap().len(), 8);
        assert_eq!(enumerate(5, 2).unwrap().len(), 60);
        assert!(matches!(enumerate(2, 4), Err(Error::Unsupported(_))));
    }

    #[test]
    fn order_and_text() {
        let gs = enumerate(2, 3).unwrap();
        assert_eq!(gs[0].to_string(), "G(k=3,d=1,a=0,b=1,A={})");
        assert_eq!(gs[5].to_string(), "G(k=3,d=1,a=0,b=1,A={1,3})");
        assert_eq!(gs[8].to_string(), "G(k=3,d=1,a=0,b=2,A={})");
        assert_eq!(gs.last().unwrap().to_string(), "G(k=3,d=1,a=1,b=2,A={1,2,3})");
    }

    #[test]
    fn no_mark_line() {
        let w = single_edge_weights(1, 1, 0, 1, EdgeMarking::NoMark).unwrap();
        assert_eq!(w, vec![half_diff(2, 1, 0)]);
    }

    #[test]
    fn marks_at_both_plane() {
        let w = single_edge_weights(2, 1, 0, 1, EdgeMarking::MarksAtBoth).unwrap();
        let third = &(&LinForm::tau(3, 2) - &LinForm::tau(3, 0).scale(&rat(1, 2)))
            - &LinForm::tau(3, 1).scale(&rat(1, 2));
        assert_eq!(w, vec![half_diff(3, 0, 1), half_diff(3, 1, 0), third]);
    }

    #[test]
    fn degree_two_mark_at_a() {
        let w = single_edge_weights(1, 2, 0, 1, EdgeMarking::MarkAtA).unwrap();
        let d = tau_diff(2, 0, 1);
        // q = 0, 1, 3
        assert_eq!(w, vec![d.scale(&rat(3, 4)), d.scale(&rat(1, 4)), d.scale(&rat(-3, 4))]);
    }

    #[test]
    fn bad_edges() {
        assert!(single_edge_weights(2, 1, 1, 1, EdgeMarking::NoMark).is_err());
        assert!(single_edge_weights(2, 1, 0, 3, EdgeMarking::NoMark).is_err());
    }

    #[test]
    fn one_point_line() {
        let e = euler_data(&graph(1, 1, 0, 1, &[])).unwrap();
        assert_eq!(e.susy_weights, vec![half_diff(2, 1, 0)]);
        let et = RatFunc::new(Poly::one(2), tau_diff(2, 1, 0).to_poly()).unwrap();
        assert_eq!(e.et_inverse.to_ratfunc(), et);
    }

    #[test]
    fn two_point_line() {
        let e = euler_data(&graph(1, 2, 0, 1, &[])).unwrap();
        assert_eq!(e.susy_weights, vec![half_diff(2, 1, 0), LinForm::zero(2)]);
        let et = RatFunc::new(Poly::one(2), tau_diff(2, 1, 0).to_poly().pow(2)).unwrap();
        assert_eq!(e.et_inverse.to_ratfunc(), et);
    }

    #[test]
    fn three_point_line_empty() {
        let e = euler_data(&graph(1, 3, 0, 1, &[])).unwrap();
        let lam = LinForm::lambda(2).scale(&rat(-1, 2));
        assert_eq!(e.susy_weights, vec![half_diff(2, 1, 0), LinForm::zero(2), lam]);
        let d = tau_diff(2, 1, 0).to_poly();
        let num = &d + &Poly::lambda(2);
        assert_eq!(e.et_inverse.to_ratfunc(), RatFunc::new(num, d.pow(3)).unwrap());
    }

    #[test]
    fn three_point_line_mixed() {
        let d = tau_diff(2, 1, 0).to_poly();
        let single = euler_data(&graph(1, 3, 0, 1, &[1])).unwrap();
        assert_eq!(single.et_inverse.to_ratfunc(), RatFunc::new(Poly::constant(2, int(-1)), d.pow(3)).unwrap());
        let pair = euler_data(&graph(1, 3, 0, 1, &[1, 2])).unwrap();
        assert_eq!(pair.et_inverse.to_ratfunc(), RatFunc::new(Poly::one(2), d.pow(3)).unwrap());
    }

    #[test]
    fn ranks_and_lambda() {
        for n in 1..=5 {
            for k in 1..=3 {
                for g in enumerate(n, k).unwrap() {
                    let e = euler_data(&g).unwrap();
                    assert_eq!(e.susy_weights.len() as u32, n + 1 + k - 2);
                    let has = e.susy_weights.iter().any(|w| !w.lambda_coeff().is_zero())
                        || e.et_inverse.has_lambda();
                    assert_eq!(has, g.geometry().has_lambda(), "{g}");
                }
            }
        }
    }

    #[test]
    fn pullbacks() {
        let nt = 2;
        let t = |i| Poly::tau(nt, i);
        assert_eq!(ev_pullback(&graph(1, 3, 0, 1, &[]), &[1, 1, 1]).unwrap(), t(1).pow(3));
        assert_eq!(ev_pullback(&graph(1, 3, 0, 1, &[1]), &[1, 1, 1]).unwrap(), &t(0) * &t(1).pow(2));
        assert_eq!(ev_pullback(&graph(1, 2, 0, 1, &[2]), &[0, 0]).unwrap(), Poly::one(nt));
        assert!(ev_pullback(&graph(1, 2, 0, 1, &[2]), &[0]).is_err());
    }
}
