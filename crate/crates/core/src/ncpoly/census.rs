//! Counting real, spherical and isolated paravector roots.

use std::collections::HashSet;

use super::classes::{component_sphere_paravector, roots_in_class, RootSet};
use super::polynomial::Polynomial;
use crate::clifford::{ConjugacyClassId, Multivector};
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Largest `s` with `Delta_c^s` dividing `p`, and the cofactor `Q` with
/// `p = Delta_c^s . Q`.
///
/// Classes are two-sided divisors because `Delta_c` has real coefficients.
/// The zero polynomial is reported with `s = 0`.
pub fn char_divisibility(p: &Polynomial, class: &ConjugacyClassId) -> (usize, Polynomial) {
    let delta = class.characteristic_poly(p.sig());
    let mut s = 0;
    let mut current = p.clone();
    if current.is_zero() {
        return (0, current);
    }
    loop {
        let (q, r) = current
            .div_rem_real_monic(&delta)
            .expect("divisor shares the signature");
        if !r.is_zero() {
            return (s, current);
        }
        s += 1;
        current = q;
    }
}

/// Root census over caller-supplied classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCensus {
    /// Real roots counted with multiplicity.
    pub real: usize,
    /// Sum of the `Delta` exponents over spherical classes.
    pub spherical: usize,
    /// Non-real paravector roots that are not spherical.
    pub isolated: usize,
    pub degree: usize,
    /// Paravector roots found, spherical classes excluded.
    pub isolated_roots: Vec<Multivector>,
    pub spherical_classes: Vec<ConjugacyClassId>,
}

impl RootCensus {
    /// `r + 2s + k`.
    pub fn weighted_count(&self) -> usize {
        self.real + 2 * self.spherical + self.isolated
    }

    pub fn satisfies_bound(&self) -> bool {
        self.weighted_count() <= self.degree
    }
}

/// Census of the paravector roots of `p` over `witnessed` classes.
///
/// Real entries contribute their multiplicity as roots (the power of
/// `X - alpha` dividing `p`). A sphere class is spherical when it lies
/// entirely in the zero set, and then contributes its `Delta` exponent;
/// otherwise each paravector root found in it counts as isolated.
/// Only R(0,2) and R(0,3) are supported.
pub fn paravector_root_census(
    p: &Polynomial,
    witnessed: &[ConjugacyClassId],
) -> Result<RootCensus> {
    let sig = p.sig();
    if !(sig.is_quaternionic() || sig.is_r03()) {
        return Err(Error::UnsupportedSignature(sig));
    }
    let degree = p
        .degree()
        .filter(|&d| d >= 1)
        .ok_or(Error::ConstantPolynomial)?;
    let mut census = RootCensus {
        real: 0,
        spherical: 0,
        isolated: 0,
        degree,
        isolated_roots: Vec::new(),
        spherical_classes: Vec::new(),
    };
    let mut seen = HashSet::new();
    for class in witnessed {
        if !seen.insert(class.clone()) {
            continue;
        }
        match class {
            ConjugacyClassId::Real(_) => {
                let (mult, _) = char_divisibility(p, class);
                census.real += mult;
            }
            ConjugacyClassId::Sphere { .. } => match roots_in_class(p, class)? {
                RootSet::Empty => {}
                RootSet::WholeClass(_) => {
                    let (s, _) = char_divisibility(p, class);
                    census.spherical += s;
                    census.spherical_classes.push(class.clone());
                }
                RootSet::Points(points) => {
                    for x in points.into_iter().filter(Multivector::is_paravector) {
                        census.isolated += 1;
                        census.isolated_roots.push(x);
                    }
                }
                RootSet::ComponentSphere { pinned, value, .. } => {
                    let x = component_sphere_paravector(pinned, &value);
                    debug_assert!(p.eval(&x)?.is_zero());
                    census.isolated += 1;
                    census.isolated_roots.push(x);
                }
            },
        }
    }
    Ok(census)
}

/// Multiplicity of the real number `alpha` as a root.
pub fn real_root_multiplicity(p: &Polynomial, alpha: &Rational) -> usize {
    char_divisibility(p, &ConjugacyClassId::Real(alpha.clone())).0
}
