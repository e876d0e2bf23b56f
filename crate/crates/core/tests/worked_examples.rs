//! The two worked interpolation examples, checked coefficient by coefficient.

use clifflag::lagrange::{
    brute_force_interpolate, interpolate_quaternion_detailed, interpolate_r03_detailed,
    verify_interpolant, InterpolationProblem, OracleOutcome,
};
use clifflag::scalar::frac;
use clifflag::{Multivector, Polynomial, Signature};

/// `(text) / den` in the given signature.
fn over(sig: Signature, text: &str, den: i64) -> Multivector {
    Multivector::parse(sig, text).unwrap().scale(&frac(1, den))
}

/// Polynomial from coefficients listed from degree 0 upwards.
fn poly(sig: Signature, coeffs: Vec<Multivector>) -> Polynomial {
    Polynomial::new(sig, coeffs).unwrap()
}

mod quaternion_example {
    use super::*;

    const H: Signature = Signature::QUATERNIONS;

    fn h(text: &str, den: i64) -> Multivector {
        over(H, text, den)
    }

    fn problem() -> InterpolationProblem {
        InterpolationProblem::parse(
            H,
            &["0", "1 + i", "i", "j", "k"],
            &["1", "-1", "1", "k", "-j"],
        )
        .unwrap()
    }

    #[test]
    fn interpolant() {
        let r = interpolate_quaternion_detailed(&problem()).unwrap();
        let expected = poly(H, vec![h("1", 1), h("0", 1), h("1", 1), h("i", 1)]);
        assert_eq!(r.polynomial, expected);
        assert_eq!(r.polynomial.to_string(), "X^3*(e1) + X^2*(1) + (1)");
        assert!(verify_interpolant(&r.polynomial, &problem()));
    }

    #[test]
    fn lagrange_polynomials_of_singletons() {
        let r = interpolate_quaternion_detailed(&problem()).unwrap();
        let l1 = r.term_for(0).unwrap();
        assert_eq!(l1.vanishing, poly(H, vec![h("-1 - i", 1), h("1", 1)]));
        assert_eq!(
            l1.unnormalized,
            poly(
                H,
                vec![h("-1 - i", 1), h("1", 1), h("-1 - i", 1), h("1", 1)]
            )
        );
        assert_eq!(
            l1.lagrange,
            poly(
                H,
                vec![h("1", 1), h("-1 + i", 2), h("1", 1), h("-1 + i", 2)]
            )
        );

        let l2 = r.term_for(1).unwrap();
        assert_eq!(l2.vanishing, Polynomial::x(H));
        assert_eq!(l2.normalizer, h("-1 + 3 i", 1).inverse().unwrap());
        assert_eq!(
            l2.lagrange,
            poly(
                H,
                vec![h("0", 1), h("-1 - 3 i", 10), h("0", 1), h("-1 - 3 i", 10)]
            )
        );
    }

    #[test]
    fn lagrange_polynomials_of_the_sphere() {
        let r = interpolate_quaternion_detailed(&problem()).unwrap();
        assert_eq!(
            r.singleton_vanishing,
            poly(H, vec![h("0", 1), h("-1 - i", 1), h("1", 1)])
        );

        let first = r.term_for(2).unwrap();
        let p31 = poly(
            H,
            vec![
                h("0", 1),
                -h("-2 + 2 i - 3 j + k", 3),
                h("-3 - i - j + 2 k", 3),
                h("1", 1),
            ],
        );
        assert_eq!(first.vanishing, p31);
        let l3a = poly(
            H,
            vec![
                h("0", 1),
                h("5 - 5 i + 3 j - k", 10),
                h("-1 + k", 2),
                h("5 - 2 j - k", 10),
            ],
        );
        assert_eq!(first.lagrange, l3a);

        let second = r.term_for(3).unwrap();
        let p32 = poly(
            H,
            vec![h("0", 1), h("-1 + i", 1), -h("1 + 2 i", 1), h("1", 1)],
        );
        assert_eq!(second.vanishing, p32);
        let l3b = poly(
            H,
            vec![
                h("0", 1),
                h("1 + 3 i - 3 j + k", 10),
                -h("1 + k", 2),
                h("1 - 2 i + 2 j + k", 10),
            ],
        );
        assert_eq!(second.lagrange, l3b);

        assert!(r.term_for(4).is_none());
    }

    #[test]
    fn oracle_finds_the_same_polynomial() {
        let r = interpolate_quaternion_detailed(&problem()).unwrap();
        assert_eq!(
            brute_force_interpolate(&problem(), 3),
            OracleOutcome::UniqueSolution(r.polynomial)
        );
    }
}

mod r03_example {
    use super::*;

    const S: Signature = Signature::R03;

    fn m(text: &str, den: i64) -> Multivector {
        over(S, text, den)
    }

    fn problem() -> InterpolationProblem {
        InterpolationProblem::parse(S, &["e1", "e2 + e23", "-1"], &["1", "2 e23", "e1"]).unwrap()
    }

    #[test]
    fn vanishing_polynomial_of_the_last_point() {
        let r = interpolate_r03_detailed(&problem()).unwrap();
        let p3 = poly(
            S,
            vec![
                m("6 + 3 e12 + 2 e3 + e123", 5),
                m("e1 - 3 e2 + 2 e13 - e23", 5),
                m("1", 1),
            ],
        );
        assert_eq!(r.terms[2].vanishing, p3);
    }

    #[test]
    fn lagrange_polynomials() {
        let r = interpolate_r03_detailed(&problem()).unwrap();
        let l1 = poly(
            S,
            vec![
                m(
                    "8 - 8 e1 + 6 e2 - 6 e12 - 4 e3 - 4 e13 - 2 e23 - 2 e123",
                    20,
                ),
                m("6 - 10 e1 + 12 e2 - 8 e13 - 4 e123", 20),
                m(
                    "-2 - 2 e1 + 6 e2 + 6 e12 + 4 e3 - 4 e13 + 2 e23 - 2 e123",
                    20,
                ),
            ],
        );
        let l2 = poly(
            S,
            vec![
                m("1 + 4 e1 - 3 e2 + 3 e12 + 2 e3 + 2 e13 + e23 + e123", 15),
                m("-3 + 5 e1 - 6 e2 + 4 e13 + 2 e123", 15),
                m("-4 + e1 - 3 e2 - 3 e12 - 2 e3 + 2 e13 - e23 + e123", 15),
            ],
        );
        let l3 = poly(
            S,
            vec![
                m("16 + 4 e1 - 3 e2 + 3 e12 + 2 e3 + 2 e13 + e23 + e123", 30),
                m("-3 + 5 e1 - 6 e2 + 4 e13 + 2 e123", 30),
                m("11 + e1 - 3 e2 - 3 e12 - 2 e3 + 2 e13 - e23 + e123", 30),
            ],
        );
        assert_eq!(r.terms[0].lagrange, l1);
        assert_eq!(r.terms[1].lagrange, l2);
        assert_eq!(r.terms[2].lagrange, l3);
    }

    /// The displayed final coefficients.
    fn displayed() -> Polynomial {
        poly(
            S,
            vec![
                m("6 e1 + 8 e2 - 5 e12 - 10 e3 - 2 e13 + 4 e23 + 5 e123", 15),
                m(
                    "-6 - 9 e1 + 13 e2 + 3 e12 - 8 e3 - 12 e13 - e23 + 9 e123",
                    15,
                ),
                m("-6 + 5 e2 + 8 e12 + 2 e3 - 10 e13 - 5 e23 + 4 e123", 15),
            ],
        )
    }

    #[test]
    fn interpolant_of_the_stated_data() {
        let r = interpolate_r03_detailed(&problem()).unwrap();
        let expected = poly(
            S,
            vec![
                m("2 + 10 e2 + e12 + 4 e3 - 10 e13 + 7 e123", 15),
                m(
                    "2 - 13 e1 + 9 e2 + 11 e12 + 14 e3 - 6 e13 - 7 e23 + 7 e123",
                    15,
                ),
                m("2 e1 - e2 + 10 e12 + 10 e3 + 4 e13 - 7 e23", 15),
            ],
        );
        assert_eq!(r.polynomial, expected);
        assert!(verify_interpolant(&r.polynomial, &problem()));
        assert_eq!(
            brute_force_interpolate(&problem(), 2),
            OracleOutcome::UniqueSolution(expected)
        );
    }

    #[test]
    fn displayed_coefficients_interpolate_2e13_at_the_second_point() {
        let x2 = m("e2 + e23", 1);
        assert_eq!(displayed().eval(&x2).unwrap(), m("2 e13", 1));
        let altered =
            InterpolationProblem::parse(S, &["e1", "e2 + e23", "-1"], &["1", "2 e13", "e1"])
                .unwrap();
        assert_eq!(
            interpolate_r03_detailed(&altered).unwrap().polynomial,
            displayed()
        );
    }
}
