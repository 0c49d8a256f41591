//! Degree-one invariants of `P^n` by summing over torus-fixed loci.
//!
//! Each locus contributes
//! `int_{M_G} ev^*(classes) / (e(odd normal) * e(normal))` restricted to
//! the single power of `kappa` allowed by degree. The odd normal bundle
//! splits into line bundles of weights `w_i`, and the `kappa^{-r-c}`
//! coefficient of `prod (kappa + w_i)^{-1}` is `(-1)^c h_c(w)`.

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{complete_homogeneous, complete_homogeneous_in, int, Dual, Poly, RatFunc, Rational};
use crate::graphs::{enumerate, euler_data, ev_pullback, EulerData, FixedGraph, ModuliKind};
use crate::invariant::Invariant;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;
pub const DEFAULT_SAMPLES: usize = 3;
/// Half-width of the integer range that torus weights are drawn from.
pub const WEIGHT_RANGE: i64 = 1000;
const MAX_ATTEMPTS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalizationJob {
    pub n: u32,
    pub k: u32,
    pub d: u32,
    pub classes: Vec<u32>,
}

impl LocalizationJob {
    pub fn new(n: u32, classes: &[u32]) -> Result<Self> {
        let k = classes.len() as u32;
        if n < 1 {
            return Err(Error::Domain("n must be >= 1".into()));
        }
        if !(1..=3).contains(&k) {
            return Err(Error::Unsupported(format!("localization with k = {k} marked points")));
        }
        if let Some(a) = classes.iter().find(|&&a| a > n) {
            return Err(Error::Domain(format!("class exponent {a} exceeds n = {n}")));
        }
        Ok(LocalizationJob { n, k, d: 1, classes: classes.to_vec() })
    }

    /// Complex dimension of the moduli of maps.
    pub fn dim(&self) -> i64 {
        (self.n + self.d * (self.n + 1) + self.k) as i64 - 3
    }

    /// Rank of the odd normal bundle.
    pub fn rank(&self) -> i64 {
        (self.d * (self.n + 1) + self.k) as i64 - 2
    }

    pub fn class_degree(&self) -> i64 {
        self.classes.iter().map(|&a| a as i64).sum()
    }

    /// Power of `h` extracted from the inverse odd Euler class.
    pub fn c(&self) -> i64 {
        self.dim() - self.class_degree()
    }

    pub fn kappa_exp(&self) -> i64 {
        -self.rank() - self.dim() + self.class_degree()
    }

    pub fn is_graded_zero(&self) -> bool {
        self.c() < 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Evaluate at `samples` random integer weight vectors and require
    /// exact agreement.
    Evaluate { samples: usize, seed: u64 },
    /// Sum rational functions and require a constant; `n <= 2` only.
    Symbolic,
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy::Evaluate { samples: DEFAULT_SAMPLES, seed: DEFAULT_SEED }
    }
}

/// A fixed locus with its Euler data computed once.
#[derive(Clone, Debug)]
pub struct PreparedGraph {
    pub graph: FixedGraph,
    pub data: EulerData,
    pub ev: Poly,
}

impl PreparedGraph {
    pub fn new(graph: FixedGraph, job: &LocalizationJob) -> Result<Self> {
        let data = euler_data(&graph)?;
        let ev = ev_pullback(&graph, &job.classes)?;
        Ok(PreparedGraph { graph, data, ev })
    }

    /// Contribution at `tau`; `None` when `tau` makes a denominator vanish.
    pub fn evaluate(&self, job: &LocalizationJob, tau: &[Rational]) -> Result<Option<Rational>> {
        let c = job.c();
        if c < 0 {
            return Ok(Some(Rational::zero()));
        }
        let Some(et) = self.data.et_inverse.eval(tau)? else {
            return Ok(None);
        };
        let weights: Vec<Dual> =
            self.data.susy_weights.iter().map(|w| w.eval(tau)).collect::<Result<_>>()?;
        let h = complete_homogeneous_in(c as usize, &weights, Dual::one()).unwrap_or_default();
        let ev = self.ev.eval_dual(tau)?;
        let mut total = &(&h * &ev) * &et;
        if c % 2 == 1 {
            total = -total;
        }
        Ok(Some(match self.graph.geometry().moduli_kind {
            ModuliKind::Point => total.re,
            ModuliKind::M04 => total.eps,
        }))
    }

    pub fn symbolic(&self, job: &LocalizationJob) -> Result<RatFunc> {
        let nt = self.graph.num_tau();
        let c = job.c();
        if c < 0 {
            return Ok(RatFunc::zero(nt));
        }
        let h = complete_homogeneous(c as usize, &self.data.susy_weights, nt);
        let sign = if c % 2 == 1 { int(-1) } else { int(1) };
        let top = (&h * &self.ev).scale(&sign);
        let total = RatFunc::from_poly(top).try_mul(&self.data.et_inverse.to_ratfunc())?;
        Ok(match self.graph.geometry().moduli_kind {
            ModuliKind::Point => total.lambda_free_part(),
            ModuliKind::M04 => total.lambda_coefficient(),
        })
    }
}

pub fn prepare(job: &LocalizationJob) -> Result<Vec<PreparedGraph>> {
    enumerate(job.n, job.k)?.into_iter().map(|g| PreparedGraph::new(g, job)).collect()
}

/// Contribution of one fixed locus at the weights `tau`, with the power of
/// `kappa` stripped.
pub fn graph_contribution(g: &FixedGraph, job: &LocalizationJob, tau: &[Rational]) -> Result<Rational> {
    check_tau(job, tau)?;
    PreparedGraph::new(*g, job)?
        .evaluate(job, tau)?
        .ok_or_else(|| Error::Arithmetic(format!("a denominator of {g} vanishes at these weights")))
}

fn check_tau(job: &LocalizationJob, tau: &[Rational]) -> Result<()> {
    if tau.len() != job.n as usize + 1 {
        return Err(Error::Dimension(format!("{} weights for P^{}", tau.len(), job.n)));
    }
    Ok(())
}

/// Pairwise distinct integers in `[-WEIGHT_RANGE, WEIGHT_RANGE]`.
pub fn sample_tau(rng: &mut ChaCha8Rng, num_tau: usize) -> Vec<Rational> {
    let width = (2 * WEIGHT_RANGE + 1) as usize;
    rand::seq::index::sample(rng, width, num_tau)
        .into_iter()
        .map(|i| int(i as i64 - WEIGHT_RANGE))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphTerm {
    pub graph: FixedGraph,
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct Sample {
    #[serde(serialize_with = "ser_rationals")]
    pub tau: Vec<Rational>,
    #[serde(serialize_with = "ser_rational")]
    pub total: Rational,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<GraphTerm>,
}

/// An invariant together with how it was obtained.
#[derive(Clone, Debug, Serialize)]
pub struct Evaluation {
    pub invariant: Invariant,
    pub samples: Vec<Sample>,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

fn ser_rationals<S: serde::Serializer>(r: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(r.iter().map(|x| x.to_string()))
}

pub fn invariant(n: u32, classes: &[u32], strategy: Strategy) -> Result<Invariant> {
    Ok(evaluate(n, classes, strategy, false)?.invariant)
}

/// Like [`invariant`], recording the weight samples and, when `trace` is
/// set, every per-locus term.
pub fn evaluate(n: u32, classes: &[u32], strategy: Strategy, trace: bool) -> Result<Evaluation> {
    let job = LocalizationJob::new(n, classes)?;
    if job.is_graded_zero() {
        return Ok(Evaluation { invariant: Invariant::Zero, samples: Vec::new() });
    }
    let graphs = prepare(&job)?;
    match strategy {
        Strategy::Symbolic => {
            if n > 2 {
                return Err(Error::Unsupported(format!("symbolic localization for n = {n} > 2")));
            }
            let mut sum = RatFunc::zero(n as usize + 1);
            for g in &graphs {
                sum = sum.try_add(&g.symbolic(&job)?)?;
            }
            let value = sum.as_constant().ok_or_else(|| {
                Error::Inconsistent(format!("localization sum for {classes:?} on P^{n} is {sum}"))
            })?;
            Ok(Evaluation { invariant: Invariant::new(value, job.kappa_exp()), samples: Vec::new() })
        }
        Strategy::Evaluate { samples, seed } => {
            if samples == 0 {
                return Err(Error::Domain("at least one weight sample is needed".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut done: Vec<Sample> = Vec::with_capacity(samples);
            let mut attempts = 0;
            while done.len() < samples {
                attempts += 1;
                if attempts > MAX_ATTEMPTS {
                    return Err(Error::Resample { attempts: MAX_ATTEMPTS });
                }
                let tau = sample_tau(&mut rng, n as usize + 1);
                if let Some(s) = sum_at(&graphs, &job, tau, trace)? {
                    done.push(s);
                }
            }
            let first = &done[0].total;
            if let Some(bad) = done.iter().find(|s| &s.total != first) {
                return Err(Error::Inconsistent(format!(
                    "{classes:?} on P^{n}: {first} at one weight sample, {} at another",
                    bad.total
                )));
            }
            let invariant = Invariant::new(first.clone(), job.kappa_exp());
            Ok(Evaluation { invariant, samples: done })
        }
    }
}

fn sum_at(graphs: &[PreparedGraph], job: &LocalizationJob, tau: Vec<Rational>, trace: bool) -> Result<Option<Sample>> {
    let mut total = Rational::zero();
    let mut terms = Vec::new();
    for g in graphs {
        let Some(v) = g.evaluate(job, &tau)? else {
            return Ok(None);
        };
        total += &v;
        if trace {
            terms.push(GraphTerm { graph: g.graph, value: v });
        }
    }
    Ok(Some(Sample { tau, total, terms }))
}

/// True when a codegree-zero three-point invariant equals `kappa^{-r}`.
pub fn check_extension(n: u32, classes: &[u32]) -> Result<bool> {
    let job = LocalizationJob::new(n, classes)?;
    if job.k != 3 || job.c() != 0 {
        return Err(Error::Domain(format!(
            "extension check needs three classes of total degree {}, got {classes:?}",
            job.dim()
        )));
    }
    let value = invariant(n, classes, Strategy::default())?;
    Ok(value == Invariant::new(int(1), -job.rank()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn inv(c: Rational, e: i64) -> Invariant {
        Invariant::new(c, e)
    }

    fn default(n: u32, classes: &[u32]) -> Invariant {
        invariant(n, classes, Strategy::default()).unwrap()
    }

    #[test]
    fn job_numbers() {
        let j = LocalizationJob::new(3, &[2, 1, 1]).unwrap();
        assert_eq!((j.dim(), j.rank(), j.c(), j.kappa_exp()), (7, 5, 3, -8));
        assert!(LocalizationJob::new(2, &[2, 2, 2]).unwrap().is_graded_zero());
        assert!(LocalizationJob::new(2, &[3]).is_err());
        assert!(matches!(LocalizationJob::new(2, &[0, 0, 0, 0]), Err(Error::Unsupported(_))));
    }

    #[test]
    fn one_point_term() {
        let job = LocalizationJob::new(1, &[1]).unwrap();
        let g = FixedGraph::new(1, 1, 0, 1, 1, &[]).unwrap();
        assert_eq!(graph_contribution(&g, &job, &[int(0), int(1)]).unwrap(), int(1));
    }

    #[test]
    fn three_point_singleton_term() {
        let job = LocalizationJob::new(1, &[1, 1, 1]).unwrap();
        let g = FixedGraph::new(1, 1, 0, 1, 3, &[1]).unwrap();
        let (t0, t1) = (rat(3, 1), rat(-5, 2));
        let expected = -(&t0 * &t1 * &t1) / num_traits::pow(&t1 - &t0, 3);
        assert_eq!(graph_contribution(&g, &job, &[t0, t1]).unwrap(), expected);
    }

    #[test]
    fn codegree_two_empty_term() {
        let job = LocalizationJob::new(1, &[1, 1, 0]).unwrap();
        let g = FixedGraph::new(1, 1, 0, 1, 3, &[]).unwrap();
        assert!(graph_contribution(&g, &job, &[int(7), int(-4)]).unwrap().is_zero());
    }

    #[test]
    fn vanishing_denominator() {
        let job = LocalizationJob::new(1, &[1]).unwrap();
        let g = FixedGraph::new(1, 1, 0, 1, 1, &[]).unwrap();
        assert!(graph_contribution(&g, &job, &[int(2), int(2)]).is_err());
    }

    #[test]
    fn line_values() {
        assert_eq!(default(1, &[1]), inv(int(1), -1));
        assert_eq!(default(1, &[0]), inv(int(-1), -2));
        assert_eq!(default(1, &[0, 0]), Invariant::Zero);
        assert_eq!(default(1, &[1, 0, 0]), inv(rat(-1, 4), -5));
    }

    #[test]
    fn higher_values() {
        assert_eq!(default(2, &[2]), inv(int(2), -3));
        assert_eq!(default(2, &[2, 2, 2]), Invariant::Zero);
        assert_eq!(default(3, &[2, 1, 1]), inv(int(5), -8));
    }

    #[test]
    fn symbolic_agrees() {
        for classes in [&[1u32][..], &[0], &[1, 0], &[2, 1, 0], &[1, 1, 1]] {
            for n in 1..=2 {
                if classes.iter().any(|&a| a > n) {
                    continue;
                }
                assert_eq!(invariant(n, classes, Strategy::Symbolic).unwrap(), default(n, classes));
            }
        }
        assert!(matches!(invariant(3, &[1], Strategy::Symbolic), Err(Error::Unsupported(_))));
    }

    #[test]
    fn extension() {
        assert!(check_extension(1, &[1, 1, 1]).unwrap());
        assert!(check_extension(3, &[3, 3, 1]).unwrap());
        assert!(check_extension(2, &[2, 2, 1]).unwrap());
        assert!(check_extension(2, &[2, 1, 1]).is_err());
    }

    #[test]
    fn samples_are_recorded() {
        let e = evaluate(2, &[2, 1], Strategy::Evaluate { samples: 4, seed: 9 }, true).unwrap();
        assert_eq!(e.samples.len(), 4);
        assert_eq!(e.samples[0].terms.len(), 12);
        assert_eq!(e.invariant, inv(rat(3, 2), -4));
    }
}
