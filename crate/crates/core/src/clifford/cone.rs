//! The quadratic cone and its conjugacy classes.
//!
//! The cone of R(p,q) is the real line together with every `x` whose trace and
//! norm are real with `4 n(x) > t(x)^2`. Each non-real cone element is
//! `alpha + beta J` with `J^2 = -1`, and in R(0,2) and R(0,3) its conjugacy
//! class is the sphere of elements sharing its trace and norm.

use std::fmt;

use num_traits::Zero;

use super::multivector::Multivector;
use super::signature::Signature;
use crate::error::{Error, Result};
use crate::scalar::{int, Rational};

/// Identifier of a conjugacy class of cone elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConjugacyClassId {
    /// The singleton `{alpha}`.
    Real(Rational),
    /// Every cone element with trace `t` and norm `n`; always `4n > t^2`.
    Sphere { trace: Rational, norm: Rational },
}

impl ConjugacyClassId {
    pub fn sphere(trace: Rational, norm: Rational) -> Result<Self> {
        if int(4) * &norm <= &trace * &trace {
            return Err(Error::DegenerateClass {
                trace: trace.to_string(),
                norm: norm.to_string(),
            });
        }
        Ok(ConjugacyClassId::Sphere { trace, norm })
    }

    /// The square roots of `-1`: trace 0, norm 1.
    pub fn unit_sphere() -> Self {
        ConjugacyClassId::Sphere {
            trace: Rational::zero(),
            norm: int(1),
        }
    }

    pub fn is_real(&self) -> bool {
        matches!(self, ConjugacyClassId::Real(_))
    }

    /// Trace and norm of any member.
    pub fn trace_norm(&self) -> (Rational, Rational) {
        match self {
            ConjugacyClassId::Real(a) => (a * int(2), a * a),
            ConjugacyClassId::Sphere { trace, norm } => (trace.clone(), norm.clone()),
        }
    }

    /// Membership test; requires `x` to lie in the cone.
    pub fn contains(&self, x: &Multivector) -> bool {
        cone_class(x).as_ref() == Some(self)
    }
}

impl fmt::Display for ConjugacyClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjugacyClassId::Real(a) => write!(f, "real({a})"),
            ConjugacyClassId::Sphere { trace, norm } => write!(f, "sphere(t={trace}, n={norm})"),
        }
    }
}

/// Cone membership from the general definition.
pub fn in_quadratic_cone(x: &Multivector) -> bool {
    if x.is_scalar() {
        return true;
    }
    let t = x.trace();
    let n = x.norm();
    t.is_scalar() && n.is_scalar() && int(4) * n.scalar_part() > t.scalar_part() * t.scalar_part()
}

/// Cone membership for R(0,q) in its reduced form: real trace and
/// real norm, without the inequality.
pub fn in_quadratic_cone_r0q(x: &Multivector) -> Result<bool> {
    if x.sig().p() != 0 {
        return Err(Error::UnsupportedSignature(x.sig()));
    }
    Ok(x.is_scalar() || (x.trace().is_scalar() && x.norm().is_scalar()))
}

/// The class invariant `(t, n)` of a cone element, in any signature. `None`
/// outside the cone.
pub fn cone_class(x: &Multivector) -> Option<ConjugacyClassId> {
    if x.is_scalar() {
        return Some(ConjugacyClassId::Real(x.scalar_part().clone()));
    }
    if !in_quadratic_cone(x) {
        return None;
    }
    Some(ConjugacyClassId::Sphere {
        trace: x.trace().scalar_part().clone(),
        norm: x.norm().scalar_part().clone(),
    })
}

fn check_class_signature(sig: Signature) -> Result<()> {
    if sig.is_quaternionic() || sig.is_r03() {
        Ok(())
    } else {
        Err(Error::UnsupportedSignature(sig))
    }
}

/// Conjugacy class of a cone element of R(0,2) or R(0,3).
pub fn class_of(x: &Multivector) -> Result<ConjugacyClassId> {
    check_class_signature(x.sig())?;
    cone_class(x).ok_or(Error::NotInCone)
}

pub fn same_class(x: &Multivector, y: &Multivector) -> Result<bool> {
    x.sig().expect(y.sig())?;
    Ok(class_of(x)? == class_of(y)?)
}

/// `beta^2 = n - t^2/4` for a sphere class; zero for real classes.
pub fn radius_sq(class: &ConjugacyClassId) -> Rational {
    match class {
        ConjugacyClassId::Real(_) => Rational::zero(),
        ConjugacyClassId::Sphere { trace, norm } => norm - trace * trace / int(4),
    }
}
