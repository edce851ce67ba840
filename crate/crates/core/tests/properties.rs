//! Property tests over randomly generated functions, expressions and
//! distributions.

use distcalc::dist::{dual_seminorm, pair, BoundedSetSpec, DistributionRep};
use distcalc::expr::{infer, parse, Expr};
use distcalc::seminorm::{eval_seminorm, GridSpec, SeminormSpec};
use distcalc::space::{Space, SpaceKind};
use distcalc::symbolic::SymbolicFunction;
use num_complex::Complex64;
use proptest::prelude::*;

fn grid() -> GridSpec {
    GridSpec::default()
}

/// Random smooth functions that stay rapidly decreasing, so every seminorm
/// in the tests below is defined.
fn schwartz_function() -> impl Strategy<Value = SymbolicFunction> {
    let leaf = prop_oneof![
        (0.5f64..2.0).prop_map(|a| SymbolicFunction::gaussian(1, a).unwrap()),
        (0.5f64..1.5).prop_map(|r| SymbolicFunction::bump(1, r).unwrap()),
        proptest::collection::vec(-1.0f64..1.0, 1..4).prop_map(|coeffs| {
            let coeffs: Vec<Complex64> =
                coeffs.into_iter().map(|c| Complex64::new(c, 0.0)).collect();
            SymbolicFunction::polynomial(1, &coeffs)
                .mul(&SymbolicFunction::gaussian(1, 1.0).unwrap())
        }),
    ];
    proptest::collection::vec(leaf, 1..3).prop_flat_map(|parts| {
        ((-0.5f64..0.5), (0.7f64..1.4), Just(parts)).prop_map(|(shift, scale, parts)| {
            let mut acc = SymbolicFunction::zero(1);
            for p in &parts {
                acc = acc.add(p);
            }
            acc.translate(&[shift]).dilate(scale).unwrap()
        })
    })
}

/// Arbitrary derivative direction words of order ≤ 3 over ℝ¹.
fn small_order() -> impl Strategy<Value = Vec<u32>> {
    (0u32..=3).prop_map(|k| vec![k])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn symbolic_derivatives_match_central_differences(
        f in schwartz_function(),
        order in small_order(),
        x in -2.0f64..2.0,
    ) {
        let d = f.derivative(&order);
        let next = {
            let mut o = order.clone();
            o[0] += 1;
            f.derivative(&o)
        };
        // skip near-stationary sample points, where the relative error of a
        // finite difference is unbounded
        let scale = d.evaluate(&[x]).norm();
        prop_assume!(scale > 1e-3);
        let h = 1e-5;
        let fd = (d.evaluate(&[x + h]) - d.evaluate(&[x - h])) / (2.0 * h);
        let sym = next.evaluate(&[x]);
        let tol = 1e-5 * (1.0 + sym.norm() + fd.norm());
        prop_assert!((sym - fd).norm() <= tol.max(1e-5),
            "at {x}, order {:?}: {sym} vs {fd}", order);
    }

    #[test]
    fn seminorms_are_absolutely_homogeneous(
        f in schwartz_function(),
        lambda in -3.0f64..3.0,
    ) {
        let spec = SeminormSpec::SNorm { m: 1, beta: vec![1] };
        let g = grid();
        let base = eval_seminorm(&spec, &f, &g).unwrap();
        let scaled = eval_seminorm(&spec, &f.scale(Complex64::new(lambda, 0.0)), &g).unwrap();
        prop_assert!((scaled - lambda.abs() * base).abs() <= 1e-9 * (1.0 + base));
    }

    #[test]
    fn seminorms_satisfy_the_triangle_inequality(
        f in schwartz_function(),
        g in schwartz_function(),
    ) {
        let spec = SeminormSpec::SNorm { m: 1, beta: vec![0] };
        let gr = grid();
        let sum = eval_seminorm(&spec, &f.add(&g), &gr).unwrap();
        let split = eval_seminorm(&spec, &f, &gr).unwrap()
            + eval_seminorm(&spec, &g, &gr).unwrap();
        // the grid supremum of the sum may see a point the summands' suprema
        // miss; allow grid-level slack
        prop_assert!(sum <= split + 1e-6 * (1.0 + split), "{sum} > {split}");
    }

    #[test]
    fn pairing_is_linear_over_rational_combinations(
        f in schwartz_function(),
        g in schwartz_function(),
        num_a in -4i32..=4,
        num_b in -4i32..=4,
        order in small_order(),
        at in -1.0f64..1.0,
    ) {
        let gr = grid();
        let a = Complex64::new(num_a as f64 / 2.0, 0.0);
        let b = Complex64::new(num_b as f64 / 2.0, 0.0);
        let t = DistributionRep::dirac_derivative(order, vec![at]);
        let lhs = pair(&f.scale(a).add(&g.scale(b)), &t, &gr).unwrap();
        let rhs = pair(&f, &t, &gr).unwrap() * a + pair(&g, &t, &gr).unwrap() * b;
        let tol = 1e-9 * (1.0 + lhs.norm() + rhs.norm());
        prop_assert!((lhs - rhs).norm() <= tol);
    }

    #[test]
    fn dual_seminorms_satisfy_the_seminorm_axioms(
        members in proptest::collection::vec(schwartz_function(), 1..4),
        lambda_re in -2.0f64..2.0,
        lambda_im in -2.0f64..2.0,
        o1 in small_order(),
        o2 in small_order(),
        x1 in -1.0f64..1.0,
        x2 in -1.0f64..1.0,
    ) {
        let gr = grid();
        let b = BoundedSetSpec::new(members);
        let s = DistributionRep::dirac_derivative(o1, vec![x1]);
        let t = DistributionRep::dirac_derivative(o2, vec![x2]);
        let lambda = Complex64::new(lambda_re, lambda_im);
        let hom_lhs = dual_seminorm(&s.scale(lambda), &b, &gr).unwrap();
        let hom_rhs = lambda.norm() * dual_seminorm(&s, &b, &gr).unwrap();
        prop_assert!((hom_lhs - hom_rhs).abs() <= 1e-9 * (1.0 + hom_rhs));
        let tri_lhs = dual_seminorm(&s.add(&t).unwrap(), &b, &gr).unwrap();
        let tri_rhs = dual_seminorm(&s, &b, &gr).unwrap()
            + dual_seminorm(&t, &b, &gr).unwrap();
        prop_assert!(tri_lhs <= tri_rhs + 1e-9 * (1.0 + tri_rhs));
    }
}

/// Random expression trees over declared atoms.
fn expr_strategy() -> impl Strategy<Value = Expr> {
    let space = prop_oneof![
        Just(Space::plain(SpaceKind::D, 1)),
        Just(Space::plain(SpaceKind::S, 1)),
        Just(Space::d_lp(1.5, 1).unwrap()),
        Just(Space::plain(SpaceKind::OC, 1)),
        Just(Space::plain(SpaceKind::OM, 1)),
        Just(Space::plain(SpaceKind::E, 1)),
        Just(Space::plain(SpaceKind::EPrime, 1)),
        Just(Space::plain(SpaceKind::OCPrime, 1)),
        Just(Space::d_prime_lq(3.0, 1).unwrap()),
        Just(Space::plain(SpaceKind::SPrime, 1)),
        Just(Space::plain(SpaceKind::DPrime, 1)),
    ];
    let leaf = ("[a-z][a-z0-9_]{0,5}", space).prop_map(|(name, space)| Expr::atom(&name, space));
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::mul(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::conv(a, b)),
            inner.clone().prop_map(Expr::fourier),
            (inner, 0u32..=2).prop_map(|(a, k)| Expr::derivative(a, vec![k])),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn printed_expressions_parse_back(e in expr_strategy()) {
        let text = e.to_string();
        let parsed = parse(&text, 1).unwrap();
        prop_assert_eq!(parsed, e);
    }

    #[test]
    fn inference_is_deterministic_and_cites_targets(e in expr_strategy()) {
        match (infer(&e), infer(&e)) {
            (Ok(a), Ok(b)) => {
                prop_assert_eq!(&a, &b);
                // a continuous or discontinuous verdict always names a target
                prop_assert_eq!(a.verdict.target.dimension(), 1);
            }
            (Err(a), Err(b)) => prop_assert_eq!(a.to_string(), b.to_string()),
            (a, b) => prop_assert!(false, "nondeterministic: {a:?} vs {b:?}"),
        }
    }
}
