mod common;

use clifflag::clifford::r03::{merge_h_plus_h, psi_minus, psi_plus, split_h_plus_h};
use clifflag::clifford::{
    class_of, cone_class, in_quadratic_cone, in_quadratic_cone_r0q, same_class,
};
use clifflag::scalar::int;
use clifflag::{Multivector, Signature};
use common::strategy;
use proptest::prelude::*;

fn sig(p: u8, q: u8) -> Signature {
    Signature::new(p, q).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative_and_distributive(
        s in strategy::signature(),
        seeds in any::<[u64; 3]>(),
    ) {
        let mut r = common::rng(seeds[0]);
        let (a, b, c) = (common::multivector(&mut r, s), common::multivector(&mut r, s), common::multivector(&mut r, s));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn conjugation_is_an_anti_involution(
        s in strategy::signature(),
        seed in any::<u64>(),
    ) {
        let mut r = common::rng(seed);
        let (x, y) = (common::multivector(&mut r, s), common::multivector(&mut r, s));
        prop_assert_eq!((&x * &y).conjugate(), &y.conjugate() * &x.conjugate());
        prop_assert_eq!(x.conjugate().conjugate(), x.clone());
        prop_assert_eq!((&x + &y).conjugate(), &x.conjugate() + &y.conjugate());
    }

    #[test]
    fn trace_and_norm_are_central_in_r03(
        x in strategy::multivector(Signature::R03),
        y in strategy::multivector(Signature::R03),
    ) {
        let (t, n) = (x.trace(), x.norm());
        prop_assert_eq!(&t * &y, &y * &t);
        prop_assert_eq!(&n * &y, &y * &n);
        prop_assert_eq!(&x.conjugate() * &x, n);
    }

    #[test]
    fn inverse_is_two_sided(s in strategy::small_signature(), seed in any::<u64>()) {
        let x = common::multivector(&mut common::rng(seed), s);
        match x.inverse() {
            Ok(inv) => {
                prop_assert!((&x * &inv).is_one());
                prop_assert!((&inv * &x).is_one());
            }
            Err(_) => prop_assert!(!x.is_invertible()),
        }
    }

    #[test]
    fn r03_fast_inverse_matches_linear_solve(x in strategy::multivector(Signature::R03)) {
        prop_assert_eq!(x.inverse().ok(), x.inverse_by_linear_solve().ok());
    }

    #[test]
    fn both_cone_tests_agree(q in 2u8..=3, x in strategy::multivector(Signature::R03), cone in any::<u64>()) {
        let s = sig(0, q);
        let sample = if q == 3 { x } else { common::multivector(&mut common::rng(cone), s) };
        let on = common::cone_point(&mut common::rng(cone), s);
        for v in [sample, on] {
            prop_assert_eq!(in_quadratic_cone(&v), in_quadratic_cone_r0q(&v).unwrap());
        }
    }

    #[test]
    fn zero_divisors_have_a_vanishing_psi(x in strategy::multivector(Signature::R03)) {
        let singular = psi_plus(&x).unwrap() == int(0) || psi_minus(&x).unwrap() == int(0);
        prop_assert_eq!(singular, !x.is_invertible());
    }

    #[test]
    fn splitting_is_an_algebra_isomorphism(
        x in strategy::multivector(Signature::R03),
        y in strategy::multivector(Signature::R03),
    ) {
        let (xp, xm) = split_h_plus_h(&x).unwrap();
        let (yp, ym) = split_h_plus_h(&y).unwrap();
        prop_assert_eq!(split_h_plus_h(&(&x * &y)).unwrap(), (&xp * &yp, &xm * &ym));
        prop_assert_eq!(split_h_plus_h(&(&x + &y)).unwrap(), (&xp + &yp, &xm + &ym));
        prop_assert_eq!(merge_h_plus_h(&xp, &xm).unwrap(), x.clone());
        prop_assert_eq!(xp.euclidean_norm_sq(), psi_plus(&x).unwrap());
        prop_assert_eq!(xm.euclidean_norm_sq(), psi_minus(&x).unwrap());
    }

    #[test]
    fn conjugation_preserves_cone_and_class(
        q in 2u8..=3,
        point in any::<u64>(),
        by in any::<u64>(),
    ) {
        let s = sig(0, q);
        let x = common::cone_point(&mut common::rng(point), s);
        let a = common::multivector(&mut common::rng(by), s);
        if let Ok(y) = x.conjugate_by(&a) {
            prop_assert!(in_quadratic_cone(&y));
            prop_assert_eq!(class_of(&y).unwrap(), class_of(&x).unwrap());
        }
    }

    #[test]
    fn distinct_r03_classes_have_invertible_differences(a in any::<u64>(), b in any::<u64>()) {
        let x = common::cone_point(&mut common::rng(a), Signature::R03);
        let y = common::cone_point(&mut common::rng(b), Signature::R03);
        if !same_class(&x, &y).unwrap() {
            prop_assert!((&x - &y).is_invertible());
        }
    }

    #[test]
    fn class_members_share_trace_and_norm(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let c = common::sphere_class(&mut r);
        for s in [Signature::QUATERNIONS, Signature::R03] {
            let x = common::point_in(&mut r, s, &c);
            prop_assert!(c.contains(&x));
            prop_assert_eq!(cone_class(&x), Some(c.clone()));
        }
    }
}

#[test]
fn same_class_zero_divisor_in_r03() {
    let s = Signature::R03;
    let x = Multivector::parse(s, "e1").unwrap();
    let y = Multivector::parse(s, "e23").unwrap();
    assert!(same_class(&x, &y).unwrap());
    assert!(!(&x - &y).is_invertible());
}
