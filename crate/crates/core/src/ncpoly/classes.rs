//! Behaviour of a polynomial on one conjugacy class.
//!
//! Every member `x` of a sphere class with trace `t` and norm `n` satisfies
//! `x^2 = x t - n`, so `x^h = A_h + x B_h` with real sequences
//! `A_0 = 1, B_0 = 0, A_{h+1} = -n B_h, B_{h+1} = A_h + t B_h`. Hence the
//! polynomial restricts to the affine map `x -> x a + b` on the class, and its
//! roots there solve one affine equation.

use num_traits::{One, Zero};

use super::polynomial::Polynomial;
use crate::clifford::r03::{merge_h_plus_h, split_h_plus_h};
use crate::clifford::{ConjugacyClassId, Multivector, Signature};
use crate::error::{Error, Result};
use crate::scalar::{int, Rational};

impl ConjugacyClassId {
    /// `X^2 - X t + n` for a sphere, `X - alpha` for a real class.
    pub fn characteristic_poly(&self, sig: Signature) -> Polynomial {
        match self {
            ConjugacyClassId::Real(a) => Polynomial::from_real(sig, &[-a, Rational::one()]),
            ConjugacyClassId::Sphere { trace, norm } => {
                Polynomial::from_real(sig, &[norm.clone(), -trace, Rational::one()])
            }
        }
    }
}

/// `P(x) = x a + b` for every `x` in `class`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineRestriction {
    pub class: ConjugacyClassId,
    pub a: Multivector,
    pub b: Multivector,
}

impl AffineRestriction {
    pub fn apply(&self, x: &Multivector) -> Multivector {
        &(x * &self.a) + &self.b
    }
}

/// Which quaternionic component of R(0,3) a partial root set pins down.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    Plus,
    Minus,
}

/// Roots of a polynomial inside one conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSet {
    Empty,
    Points(Vec<Multivector>),
    /// R(0,3) only: the `pinned` component of every root equals `value`
    /// while the other component ranges over the whole quaternionic sphere of
    /// the class. This is a 2-sphere of roots; `samples` lists rational
    /// members of it.
    ComponentSphere {
        pinned: Component,
        value: Multivector,
        samples: Vec<Multivector>,
    },
    WholeClass(ConjugacyClassId),
}

impl RootSet {
    pub fn is_empty(&self) -> bool {
        matches!(self, RootSet::Empty)
    }

    /// The explicitly listed roots (the sampled ones for a component sphere).
    pub fn listed(&self) -> &[Multivector] {
        match self {
            RootSet::Points(p) => p,
            RootSet::ComponentSphere { samples, .. } => samples,
            RootSet::Empty | RootSet::WholeClass(_) => &[],
        }
    }
}

/// Real sequences `(A_h, B_h)` with `x^h = A_h + x B_h` on the class.
fn power_reduction(class: &ConjugacyClassId, len: usize) -> Vec<(Rational, Rational)> {
    let mut out = Vec::with_capacity(len);
    match class {
        ConjugacyClassId::Real(alpha) => {
            let mut pow = Rational::one();
            for _ in 0..len {
                out.push((pow.clone(), Rational::zero()));
                pow *= alpha;
            }
        }
        ConjugacyClassId::Sphere { trace, norm } => {
            let (mut a, mut b) = (Rational::one(), Rational::zero());
            for _ in 0..len {
                out.push((a.clone(), b.clone()));
                let next_a = -(norm * &b);
                let next_b = &a + trace * &b;
                a = next_a;
                b = next_b;
            }
        }
    }
    out
}

/// The affine map that agrees with `p` on `class`.
pub fn affine_restriction(p: &Polynomial, class: &ConjugacyClassId) -> AffineRestriction {
    let sig = p.sig();
    let mut a = Multivector::zero(sig);
    let mut b = Multivector::zero(sig);
    for ((ah, bh), coeff) in power_reduction(class, p.coeffs().len())
        .iter()
        .zip(p.coeffs())
    {
        if !bh.is_zero() {
            a += &coeff.scale(bh);
        }
        if !ah.is_zero() {
            b += &coeff.scale(ah);
        }
    }
    AffineRestriction {
        class: class.clone(),
        a,
        b,
    }
}

/// Solve `x a + b = 0` for `x` in a quaternionic class.
fn solve_quaternion(a: &Multivector, b: &Multivector, class: &ConjugacyClassId) -> Result<RootSet> {
    if a.is_zero() {
        return Ok(if b.is_zero() {
            RootSet::WholeClass(class.clone())
        } else {
            RootSet::Empty
        });
    }
    let x = -&(b * &a.inverse()?);
    Ok(if class.contains(&x) {
        RootSet::Points(vec![x])
    } else {
        RootSet::Empty
    })
}

/// Rational points of the quaternionic sphere through `q`: the real part is
/// kept and the imaginary coordinates are permuted with sign changes.
fn sphere_samples(q: &Multivector) -> Vec<Multivector> {
    let re = q.coeff(0).clone();
    let v = [q.coeff(1).clone(), q.coeff(2).clone(), q.coeff(3).clone()];
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut out: Vec<Multivector> = Vec::new();
    for perm in PERMS {
        for signs in 0..8u8 {
            let coords: Vec<Rational> = std::iter::once(re.clone())
                .chain((0..3).map(|i| {
                    let c = v[perm[i]].clone();
                    if signs & (1 << i) != 0 {
                        -c
                    } else {
                        c
                    }
                }))
                .collect();
            let m = Multivector::from_coeffs(Signature::QUATERNIONS, coords)
                .expect("four quaternion coordinates");
            if !out.contains(&m) {
                out.push(m);
            }
        }
    }
    out
}

/// Roots of `p` inside `class`, for R(0,2) and R(0,3).
///
/// In R(0,3) the affine equation splits into two quaternionic equations, one
/// per component, and a point belongs to the class exactly when both of its
/// components lie on the quaternionic sphere with the same trace and norm.
pub fn roots_in_class(p: &Polynomial, class: &ConjugacyClassId) -> Result<RootSet> {
    let sig = p.sig();
    if let ConjugacyClassId::Real(alpha) = class {
        if !(sig.is_quaternionic() || sig.is_r03()) {
            return Err(Error::UnsupportedSignature(sig));
        }
        let x = Multivector::scalar(sig, alpha.clone());
        return Ok(if p.eval(&x)?.is_zero() {
            RootSet::Points(vec![x])
        } else {
            RootSet::Empty
        });
    }
    let aff = affine_restriction(p, class);
    if sig.is_quaternionic() {
        return solve_quaternion(&aff.a, &aff.b, class);
    }
    if !sig.is_r03() {
        return Err(Error::UnsupportedSignature(sig));
    }
    let (a_plus, a_minus) = split_h_plus_h(&aff.a)?;
    let (b_plus, b_minus) = split_h_plus_h(&aff.b)?;
    let plus = solve_quaternion(&a_plus, &b_plus, class)?;
    let minus = solve_quaternion(&a_minus, &b_minus, class)?;
    Ok(match (plus, minus) {
        (RootSet::Empty, _) | (_, RootSet::Empty) => RootSet::Empty,
        (RootSet::WholeClass(_), RootSet::WholeClass(_)) => RootSet::WholeClass(class.clone()),
        (RootSet::Points(xp), RootSet::Points(xm)) => {
            RootSet::Points(vec![merge_h_plus_h(&xp[0], &xm[0])?])
        }
        (RootSet::Points(xp), RootSet::WholeClass(_)) => {
            let value = xp[0].clone();
            let samples = sphere_samples(&value)
                .iter()
                .map(|m| merge_h_plus_h(&value, m))
                .collect::<Result<_>>()?;
            RootSet::ComponentSphere {
                pinned: Component::Plus,
                value,
                samples,
            }
        }
        (RootSet::WholeClass(_), RootSet::Points(xm)) => {
            let value = xm[0].clone();
            let samples = sphere_samples(&value)
                .iter()
                .map(|m| merge_h_plus_h(m, &value))
                .collect::<Result<_>>()?;
            RootSet::ComponentSphere {
                pinned: Component::Minus,
                value,
                samples,
            }
        }
        _ => unreachable!("quaternionic solving yields Empty, Points or WholeClass"),
    })
}

/// The unique paravector of an R(0,3) component sphere, if the class is
/// non-real: a paravector `alpha + v1 e1 + v2 e2 + v3 e3` has components
/// `alpha + v1 i + v2 j -+ v3 k`.
pub(crate) fn component_sphere_paravector(pinned: Component, value: &Multivector) -> Multivector {
    let c = value.coeffs();
    let v3 = match pinned {
        Component::Plus => -&c[3],
        Component::Minus => c[3].clone(),
    };
    let mut coords = vec![int(0); 8];
    coords[0] = c[0].clone();
    coords[0b001] = c[1].clone();
    coords[0b010] = c[2].clone();
    coords[0b100] = v3;
    Multivector::from_coeffs(Signature::R03, coords).expect("eight coordinates")
}
