use std::collections::BTreeMap;

use num_traits::Zero;
use proptest::prelude::*;

use sgw::exact::{poly_gcd, rat, Monomial, Poly, RatFunc, Rational};
use sgw::localize::{invariant, LocalizationJob, Strategy as Method};
use sgw::taut0::{integrate, TautExpr, TautMonomial};

const NUM_TAU: usize = 3;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| rat(p, q))
}

/// Raw terms; `lambda` exponents up to 2 so truncation gets exercised.
fn raw_terms() -> impl Strategy<Value = Vec<(Vec<u32>, Rational)>> {
    prop::collection::vec((prop::collection::vec(0u32..=2, NUM_TAU + 1), rational()), 0..6)
}

fn poly() -> impl Strategy<Value = Poly> {
    raw_terms().prop_map(|terms| {
        Poly::from_terms(NUM_TAU, terms.into_iter().map(|(e, c)| (Monomial::from_exponents(e), c))).unwrap()
    })
}

fn lambda_free_poly() -> impl Strategy<Value = Poly> {
    poly().prop_map(|p| p.split_lambda().0)
}

fn nonzero_lambda_free_poly() -> impl Strategy<Value = Poly> {
    lambda_free_poly().prop_filter("nonzero", |p| !p.is_zero())
}

/// Untruncated product on exponent vectors.
fn reference_mul(a: &Poly, b: &Poly) -> BTreeMap<Vec<u32>, Rational> {
    let mut out: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let e: Vec<u32> = ma.exponents().iter().zip(mb.exponents()).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

proptest! {
    #[test]
    fn mul_commutes(a in poly(), b in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn mul_associates(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn mul_distributes(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn lambda_squared_never_survives(a in poly(), b in poly()) {
        let product = &a * &b;
        prop_assert!(product.terms().all(|(m, _)| m.lambda_exp() <= 1));
        let mut expected = reference_mul(&a, &b);
        expected.retain(|e, _| e[NUM_TAU] <= 1);
        let got: BTreeMap<Vec<u32>, Rational> =
            product.terms().map(|(m, c)| (m.exponents().to_vec(), c.clone())).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn canonical_coefficients_nonzero(a in poly(), b in poly()) {
        prop_assert!((&a - &b).terms().all(|(_, c)| !c.is_zero()));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(), b in poly(), t in prop::collection::vec(rational(), NUM_TAU), l in rational()) {
        let ea = a.eval(&t, &l).unwrap();
        let eb = b.eval(&t, &l).unwrap();
        prop_assert_eq!((&a + &b).eval(&t, &l).unwrap(), &ea + &eb);
        // lambda^2 = 0 only holds for the dual evaluation
        let da = a.eval_dual(&t).unwrap();
        let db = b.eval_dual(&t).unwrap();
        prop_assert_eq!((&a * &b).eval_dual(&t).unwrap(), &da * &db);
    }

    #[test]
    fn gcd_finds_common_factor(a in nonzero_lambda_free_poly(), b in nonzero_lambda_free_poly(), c in nonzero_lambda_free_poly()) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = poly_gcd(&ac, &bc).unwrap();
        prop_assert!(ac.div_exact(&g).is_some());
        prop_assert!(bc.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c).is_some());
    }

    #[test]
    fn ratfunc_inverse(n in poly(), d in lambda_free_poly()) {
        prop_assume!(!d.is_zero() && !n.split_lambda().0.is_zero());
        let r = RatFunc::new(n, d).unwrap();
        let one = r.try_mul(&r.inverse().unwrap()).unwrap();
        prop_assert_eq!(one, RatFunc::one(NUM_TAU));
    }

    #[test]
    fn ratfunc_add_is_exact(n1 in lambda_free_poly(), d1 in lambda_free_poly(), n2 in lambda_free_poly(), d2 in lambda_free_poly(),
                            t in prop::collection::vec(rational(), NUM_TAU)) {
        prop_assume!(!d1.is_zero() && !d2.is_zero());
        let v1 = d1.eval_dual(&t).unwrap().re;
        let v2 = d2.eval_dual(&t).unwrap().re;
        prop_assume!(!v1.is_zero() && !v2.is_zero());
        let a = RatFunc::new(n1.clone(), d1).unwrap();
        let b = RatFunc::new(n2.clone(), d2).unwrap();
        let sum = a.try_add(&b).unwrap().eval(&t).unwrap().re;
        let expected = n1.eval_dual(&t).unwrap().re / v1 + n2.eval_dual(&t).unwrap().re / v2;
        prop_assert_eq!(sum, expected);
    }
}

fn taut_monomial(l: u32) -> impl Strategy<Value = TautMonomial> {
    let depth_max = l - 3;
    (
        prop::collection::btree_map(0..=depth_max, 1u32..=3, 0..=depth_max as usize + 1),
        prop::collection::vec((1u32..=3, 1u32..=2), 0..3),
        rational(),
    )
        .prop_map(move |(psi, kappa, c)| {
            let psi: Vec<(u32, u32)> = psi.into_iter().collect();
            TautMonomial::new(l, &psi, &kappa, c).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn taut_degree_gate(m in (4u32..=7).prop_flat_map(taut_monomial)) {
        let l = m.l;
        let d = m.degree();
        let value = integrate(&m.into());
        if d != l as u64 - 3 {
            prop_assert!(value.is_zero());
        }
    }

    #[test]
    fn taut_linearity(
        (l, v1, v2) in (4u32..=7).prop_flat_map(|l| {
            (Just(l), prop::collection::vec(taut_monomial(l), 1..4), prop::collection::vec(taut_monomial(l), 1..4))
        }),
        a in rational(),
        b in rational(),
    ) {
        let e1 = TautExpr::from_monomials(l, v1).unwrap();
        let e2 = TautExpr::from_monomials(l, v2).unwrap();
        let combined = e1.combine(&a, &e2, &b).unwrap();
        prop_assert_eq!(integrate(&combined), a * integrate(&e1) + b * integrate(&e2));
    }
}

fn job() -> impl Strategy<Value = (u32, Vec<u32>)> {
    (1u32..=3, 1usize..=3).prop_flat_map(|(n, k)| (Just(n), prop::collection::vec(0..=n, k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn weight_independence(j in job(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let (n, classes) = j;
        let a = invariant(n, &classes, Method::Evaluate { samples: 3, seed: s1 }).unwrap();
        let b = invariant(n, &classes, Method::Evaluate { samples: 3, seed: s2 }).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn permutation_invariance(j in job(), rot in 0usize..3, flip in any::<bool>()) {
        let (n, classes) = j;
        let mut permuted = classes.clone();
        let len = permuted.len();
        permuted.rotate_left(rot % len);
        if flip {
            permuted.reverse();
        }
        prop_assert_eq!(invariant(n, &classes, Method::default()).unwrap(), invariant(n, &permuted, Method::default()).unwrap());
    }

    #[test]
    fn grading_exponent(j in job()) {
        let (n, classes) = j;
        let value = invariant(n, &classes, Method::default()).unwrap();
        let job = LocalizationJob::new(n, &classes).unwrap();
        if let Some(e) = value.kappa_exp() {
            prop_assert_eq!(e, -job.rank() - job.dim() + job.class_degree());
        }
        if job.c() < 0 {
            prop_assert!(value.is_zero());
        }
    }
}
