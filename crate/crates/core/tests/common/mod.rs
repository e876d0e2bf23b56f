//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use clifflag::clifford::r03::merge_h_plus_h;
use clifflag::lagrange::InterpolationProblem;
use clifflag::scalar::frac;
use clifflag::{ConjugacyClassId, Multivector, Polynomial, Rational, Signature};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Numerator in `[-bound, bound]`, denominator in `1..=3`.
pub fn rational(rng: &mut StdRng, bound: i64) -> Rational {
    frac(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

pub fn positive_rational(rng: &mut StdRng, bound: i64) -> Rational {
    frac(rng.gen_range(1..=bound), rng.gen_range(1..=3))
}

pub fn multivector(rng: &mut StdRng, sig: Signature) -> Multivector {
    let coeffs = (0..sig.blade_count()).map(|_| rational(rng, 4)).collect();
    Multivector::from_coeffs(sig, coeffs).unwrap()
}

pub fn nonzero_quaternion(rng: &mut StdRng) -> Multivector {
    loop {
        let q = multivector(rng, Signature::QUATERNIONS);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn polynomial(rng: &mut StdRng, sig: Signature, degree: usize) -> Polynomial {
    let coeffs = (0..=degree).map(|_| multivector(rng, sig)).collect();
    Polynomial::new(sig, coeffs).unwrap()
}

/// A random square root of -1 in the quaternions, obtained by conjugating
/// `i`; rational conjugation keeps it on the unit sphere.
pub fn imaginary_unit(rng: &mut StdRng) -> Multivector {
    let i = Multivector::generator(Signature::QUATERNIONS, 1);
    i.conjugate_by(&nonzero_quaternion(rng)).unwrap()
}

/// A non-real class `alpha + beta S` with `beta > 0`.
pub fn sphere_class(rng: &mut StdRng) -> ConjugacyClassId {
    let alpha = rational(rng, 3);
    let beta = positive_rational(rng, 3);
    class_from(&alpha, &beta)
}

pub fn class_from(alpha: &Rational, beta: &Rational) -> ConjugacyClassId {
    let trace = alpha * Rational::from_integer(2.into());
    let norm = alpha * alpha + beta * beta;
    ConjugacyClassId::sphere(trace, norm).unwrap()
}

/// `(alpha, beta)` with `class = alpha + beta S`.
pub fn center_radius(class: &ConjugacyClassId) -> (Rational, Rational) {
    let (t, n) = class.trace_norm();
    let alpha = t / Rational::from_integer(2.into());
    let beta_sq = n - &alpha * &alpha;
    (
        alpha,
        exact_sqrt(&beta_sq).expect("generated classes have rational radius"),
    )
}

fn exact_sqrt(r: &Rational) -> Option<Rational> {
    let (n, d) = (r.numer(), r.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rational::new(sn, sd))
}

/// A point of a quaternionic sphere class.
pub fn quaternion_in(rng: &mut StdRng, class: &ConjugacyClassId) -> Multivector {
    match class {
        ConjugacyClassId::Real(a) => Multivector::scalar(Signature::QUATERNIONS, a.clone()),
        ConjugacyClassId::Sphere { .. } => {
            let (alpha, beta) = center_radius(class);
            let s = Signature::QUATERNIONS;
            &Multivector::scalar(s, alpha) + &imaginary_unit(rng).scale(&beta)
        }
    }
}

/// A point of an R(0,3) sphere class: both quaternionic components lie on the
/// class's sphere.
pub fn r03_in(rng: &mut StdRng, class: &ConjugacyClassId) -> Multivector {
    match class {
        ConjugacyClassId::Real(a) => Multivector::scalar(Signature::R03, a.clone()),
        ConjugacyClassId::Sphere { .. } => {
            merge_h_plus_h(&quaternion_in(rng, class), &quaternion_in(rng, class)).unwrap()
        }
    }
}

pub fn point_in(rng: &mut StdRng, sig: Signature, class: &ConjugacyClassId) -> Multivector {
    if sig.is_r03() {
        r03_in(rng, class)
    } else {
        quaternion_in(rng, class)
    }
}

/// A real class one time in four, otherwise a sphere.
pub fn any_class(rng: &mut StdRng) -> ConjugacyClassId {
    if rng.gen_range(0..4) == 0 {
        ConjugacyClassId::Real(rational(rng, 3))
    } else {
        sphere_class(rng)
    }
}

/// `count` pairwise distinct classes.
pub fn distinct_classes(rng: &mut StdRng, count: usize) -> Vec<ConjugacyClassId> {
    let mut out: Vec<ConjugacyClassId> = Vec::with_capacity(count);
    while out.len() < count {
        let c = any_class(rng);
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Random cone point in the given signature.
pub fn cone_point(rng: &mut StdRng, sig: Signature) -> Multivector {
    let c = any_class(rng);
    point_in(rng, sig, &c)
}

/// `count` distinct points of one quaternionic sphere class.
pub fn distinct_points_in(
    rng: &mut StdRng,
    class: &ConjugacyClassId,
    count: usize,
) -> Vec<Multivector> {
    let mut out: Vec<Multivector> = Vec::with_capacity(count);
    while out.len() < count {
        let x = quaternion_in(rng, class);
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// A solvable R(0,3) problem with `m` points in distinct classes.
pub fn r03_problem(rng: &mut StdRng, m: usize) -> InterpolationProblem {
    let sig = Signature::R03;
    let pairs = distinct_classes(rng, m)
        .iter()
        .map(|c| (r03_in(rng, c), multivector(rng, sig)))
        .collect();
    InterpolationProblem::new(sig, pairs).unwrap()
}

/// A solvable quaternionic problem with one class per entry of `sizes`.
/// Classes with more than one point are spheres; values in a class with
/// three or more points follow `w = x a + b`, which satisfies the
/// collinearity condition. Pairs are shuffled.
pub fn quaternion_problem_sized(rng: &mut StdRng, sizes: &[usize]) -> InterpolationProblem {
    let sig = Signature::QUATERNIONS;
    let mut classes: Vec<ConjugacyClassId> = Vec::new();
    let mut pairs = Vec::new();
    for &size in sizes {
        let c = loop {
            let c = if size > 1 {
                sphere_class(rng)
            } else {
                any_class(rng)
            };
            if !classes.contains(&c) {
                break c;
            }
        };
        let points = if c.is_real() {
            vec![quaternion_in(rng, &c)]
        } else {
            distinct_points_in(rng, &c, size)
        };
        if size >= 3 {
            let (a, b) = (multivector(rng, sig), multivector(rng, sig));
            pairs.extend(points.into_iter().map(|x| {
                let w = &(&x * &a) + &b;
                (x, w)
            }));
        } else {
            pairs.extend(points.into_iter().map(|x| (x, multivector(rng, sig))));
        }
        classes.push(c);
    }
    shuffle(rng, &mut pairs);
    InterpolationProblem::new(sig, pairs).unwrap()
}

/// Like [`quaternion_problem_sized`] with one to three points per class.
pub fn quaternion_problem(rng: &mut StdRng, classes: usize) -> InterpolationProblem {
    let sizes: Vec<usize> = (0..classes).map(|_| rng.gen_range(1..=3)).collect();
    quaternion_problem_sized(rng, &sizes)
}

pub fn shuffle<T>(rng: &mut StdRng, items: &mut [T]) {
    use rand::seq::SliceRandom;
    items.shuffle(rng);
}

pub fn random_order(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    shuffle(rng, &mut order);
    order
}

pub mod strategy {
    use super::*;
    use proptest::prelude::*;

    pub fn rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
    }

    pub fn multivector(sig: Signature) -> impl Strategy<Value = Multivector> {
        proptest::collection::vec(rational(), sig.blade_count())
            .prop_map(move |c| Multivector::from_coeffs(sig, c).unwrap())
    }

    pub fn polynomial(sig: Signature, max_degree: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(multivector(sig), 1..=max_degree + 1)
            .prop_map(move |c| Polynomial::new(sig, c).unwrap())
    }

    /// Cone points are built by the seeded generators above.
    pub fn cone_point(sig: Signature) -> impl Strategy<Value = Multivector> {
        any::<u64>().prop_map(move |seed| super::cone_point(&mut super::rng(seed), sig))
    }

    pub fn signature() -> impl Strategy<Value = Signature> {
        (0u8..=3, 0u8..=3).prop_map(|(p, q)| Signature::new(p, q).unwrap())
    }

    /// Signatures with at most 16 blades, for tests that solve linear systems.
    pub fn small_signature() -> impl Strategy<Value = Signature> {
        (0u8..=4)
            .prop_flat_map(|p| (Just(p), 0u8..=4 - p))
            .prop_map(|(p, q)| Signature::new(p, q).unwrap())
    }
}

/// A paravector of R(0,3) in the given class.
pub fn paravector_in(rng: &mut StdRng, class: &ConjugacyClassId) -> Multivector {
    let s = Signature::R03;
    match class {
        ConjugacyClassId::Real(a) => Multivector::scalar(s, a.clone()),
        ConjugacyClassId::Sphere { .. } => {
            let (alpha, beta) = center_radius(class);
            let u = imaginary_unit(rng);
            let mut x = Multivector::scalar(s, alpha);
            for (from, to) in [(1usize, 1usize), (2, 2), (3, 4)] {
                x = &x + &Multivector::blade(s, to).scale(&(u.coeff(from) * &beta));
            }
            x
        }
    }
}
