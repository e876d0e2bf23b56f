//! Interpolation over the quaternions, with several data points allowed per
//! conjugacy class.

use super::problem::{
    check_collinearity, group_by_class, ClassGroup, ClassGrouping, Collinearity,
    InterpolationProblem,
};
use crate::clifford::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::ncpoly::Polynomial;

/// One Lagrange polynomial and the pieces it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangeTerm {
    /// Index of the data point where the term equals one.
    pub point: usize,
    /// Vanishing polynomial built by appending roots (`P_j`, `P_k1`, `P_k2`).
    pub vanishing: Polynomial,
    /// `vanishing` times the characteristic polynomials of the other
    /// multi-point classes.
    pub unnormalized: Polynomial,
    /// `unnormalized(x)^-1` at the term's own point.
    pub normalizer: Multivector,
    pub lagrange: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternionInterpolation {
    pub grouping: ClassGrouping,
    /// Product of `X - x` over the singleton classes, roots appended in
    /// group order.
    pub singleton_vanishing: Polynomial,
    /// Terms for singleton classes, then two per multi-point class.
    pub terms: Vec<LagrangeTerm>,
    pub polynomial: Polynomial,
}

impl QuaternionInterpolation {
    pub fn term_for(&self, point: usize) -> Option<&LagrangeTerm> {
        self.terms.iter().find(|t| t.point == point)
    }
}

pub fn interpolate_quaternion(problem: &InterpolationProblem) -> Result<Polynomial> {
    interpolate_quaternion_detailed(problem).map(|r| r.polynomial)
}

pub fn interpolate_quaternion_detailed(
    problem: &InterpolationProblem,
) -> Result<QuaternionInterpolation> {
    let sig = problem.sig();
    if !sig.is_quaternionic() {
        return Err(Error::WrongSignature {
            expected: Signature::QUATERNIONS,
            found: sig,
        });
    }
    let grouping = group_by_class(problem)?;
    check_groups(problem, &grouping)?;

    let singles: Vec<usize> = grouping
        .groups
        .iter()
        .filter(|g| g.size() == 1)
        .map(|g| g.members[0])
        .collect();
    let multi: Vec<&ClassGroup> = grouping.groups.iter().filter(|g| g.size() >= 2).collect();

    let vanish_on = |skip: Option<usize>| -> Result<Polynomial> {
        singles
            .iter()
            .filter(|&&i| Some(i) != skip)
            .try_fold(Polynomial::one(sig), |acc, &i| {
                append_checked(&acc, problem.point(i))
            })
    };
    let deltas_except = |skip: Option<usize>| -> Result<Polynomial> {
        multi
            .iter()
            .enumerate()
            .filter(|(k, _)| Some(*k) != skip)
            .try_fold(Polynomial::one(sig), |acc, (_, g)| {
                acc.star(&g.class.characteristic_poly(sig))
            })
    };

    let mut terms = Vec::with_capacity(problem.len());
    let all_deltas = deltas_except(None)?;
    for &j in &singles {
        let vanishing = vanish_on(Some(j))?;
        terms.push(normalize(j, problem, vanishing, &all_deltas)?);
    }
    let singleton_vanishing = vanish_on(None)?;
    for (k, g) in multi.iter().enumerate() {
        let deltas = deltas_except(Some(k))?;
        let (first, second) = (g.members[0], g.members[1]);
        let p1 = append_checked(&singleton_vanishing, problem.point(second))?;
        let p2 = append_checked(&singleton_vanishing, problem.point(first))?;
        terms.push(normalize(first, problem, p1, &deltas)?);
        terms.push(normalize(second, problem, p2, &deltas)?);
    }

    let mut polynomial = Polynomial::zero(sig);
    for t in &terms {
        polynomial = polynomial.add(&t.lagrange.mul_right(problem.value(t.point))?)?;
    }
    Ok(QuaternionInterpolation {
        grouping,
        singleton_vanishing,
        terms,
        polynomial,
    })
}

fn check_groups(problem: &InterpolationProblem, grouping: &ClassGrouping) -> Result<()> {
    for (j, g) in grouping.groups.iter().enumerate() {
        if g.size() < 3 {
            continue;
        }
        let points: Vec<_> = g
            .members
            .iter()
            .map(|&i| problem.point(i).clone())
            .collect();
        let values: Vec<_> = g
            .members
            .iter()
            .map(|&i| problem.value(i).clone())
            .collect();
        if let Collinearity::Violated { h } = check_collinearity(&points, &values)? {
            return Err(Error::CollinearityViolated {
                group: j + 1,
                h,
                class: Box::new(g.class.clone()),
                representative: points[0].to_string(),
            });
        }
    }
    Ok(())
}

pub(super) fn append_checked(p: &Polynomial, y: &Multivector) -> Result<Polynomial> {
    p.append_root(y).map_err(|e| match e {
        Error::NotInvertible => Error::InternalNonInvertible,
        other => other,
    })
}

fn normalize(
    point: usize,
    problem: &InterpolationProblem,
    vanishing: Polynomial,
    deltas: &Polynomial,
) -> Result<LagrangeTerm> {
    let unnormalized = deltas.star(&vanishing)?;
    let normalizer = unnormalized
        .eval(problem.point(point))?
        .inverse()
        .map_err(|_| Error::InternalNonInvertible)?;
    let lagrange = unnormalized.mul_right(&normalizer)?;
    Ok(LagrangeTerm {
        point,
        vanishing,
        unnormalized,
        normalizer,
        lagrange,
    })
}
