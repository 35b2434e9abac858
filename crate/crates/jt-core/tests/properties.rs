//! Property tests on randomized inputs: algebraic identities that must hold
//! for every coordinate vector, not just the hand-picked examples.

use proptest::prelude::*;

use jt_core::jalg::{classify, spectral_decompose, Algebra, Element, Family};
use jt_core::riesz::tilde_mu_boundary;

fn algebra_strategy() -> impl Strategy<Value = Algebra> {
    prop_oneof![
        (1usize..=4).prop_map(|r| Algebra::new(Family::SymReal, r).unwrap()),
        (1usize..=3).prop_map(|r| Algebra::new(Family::HermComplex, r).unwrap()),
        (1usize..=3).prop_map(|r| Algebra::new(Family::HermQuaternion, r).unwrap()),
        (3usize..=6).prop_map(|n| Algebra::new(Family::Minkowski, n).unwrap()),
    ]
}

fn element_for(a: &Algebra) -> impl Strategy<Value = Element> {
    prop::collection::vec(-10.0f64..10.0, a.dim()).prop_map(|v| Element::from_slice(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jordan_identity_holds((a, xs, ys) in algebra_strategy().prop_flat_map(|a| {
        let ex = element_for(&a);
        let ey = element_for(&a);
        (Just(a), ex, ey)
    })) {
        // x(x²y) = x²(xy)
        let xsq = a.product(&xs, &xs).unwrap();
        let lhs = a.product(&xs, &a.product(&xsq, &ys).unwrap()).unwrap();
        let rhs = a.product(&xsq, &a.product(&xs, &ys).unwrap()).unwrap();
        let scale = (1.0 + xs.norm()).powi(3) * (1.0 + ys.norm());
        prop_assert!(lhs.sub(&rhs).norm() <= 1e-10 * scale);
    }

    #[test]
    fn spectral_round_trip((a, x) in algebra_strategy().prop_flat_map(|a| {
        let e = element_for(&a);
        (Just(a), e)
    })) {
        let sd = spectral_decompose(&a, &x, 1e-9).unwrap();
        prop_assert_eq!(sd.values.len(), a.rank());
        let resid = sd.reconstruct().sub(&x).norm();
        prop_assert!(resid <= 1e-9 * x.norm().max(1.0));
        // descending order
        for w in sd.values.windows(2) {
            prop_assert!(w[0] >= w[1]);
        }
    }

    #[test]
    fn classification_invariants((a, x) in algebra_strategy().prop_flat_map(|a| {
        let e = element_for(&a);
        (Just(a), e)
    })) {
        let cl = classify(&a, &x, 1e-9).unwrap();
        prop_assert!(cl.index.unsigned_abs() as usize <= cl.rank);
        prop_assert!(cl.rank <= a.rank());
        if cl.invertible {
            prop_assert_eq!(cl.rank, a.rank());
            prop_assert_eq!(cl.index.rem_euclid(2) as usize, a.rank() % 2);
        }
        // x = x₊ − x₋ with x₊ x₋ ≈ 0
        let recon = cl.pos_part.sub(&cl.neg_part);
        let drop = x.sub(&recon).norm();
        prop_assert!(drop <= 2.0 * cl.tol * cl.scale * a.rank() as f64 + 1e-12);
        let cross = a.product(&cl.pos_part, &cl.neg_part).unwrap().norm();
        prop_assert!(cross <= 1e-7 * (1.0 + cl.scale * cl.scale));
    }

    #[test]
    fn boundary_value_homogeneity((a, x, t) in algebra_strategy().prop_flat_map(|a| {
        let e = element_for(&a);
        (Just(a), e, 0.1f64..10.0)
    })) {
        // μ̃_s(t·x) = t^{−rs} μ̃_s(x) for t > 0 and invertible x
        let cl = classify(&a, &x, 1e-9).unwrap();
        prop_assume!(cl.invertible);
        // stay away from the tolerance edge so both sides agree on the index
        let sd = spectral_decompose(&a, &x, 1e-9).unwrap();
        let min = sd.values.iter().fold(f64::INFINITY, |m, &l| m.min(l.abs()));
        prop_assume!(min > 1e-5 * sd.scale());
        for s in [0.5, 1.0, 2.0] {
            let base = tilde_mu_boundary(&a, s, &x).unwrap();
            let scaled = tilde_mu_boundary(&a, s, &x.scaled(t)).unwrap();
            let want = base * t.powf(-(a.rank() as f64) * s);
            prop_assert!((scaled - want).norm() <= 1e-9 * want.norm());
        }
    }
}
