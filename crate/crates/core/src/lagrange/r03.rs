//! Interpolation in R(0,3) at points from pairwise distinct classes.

use super::problem::{group_by_class, InterpolationProblem};
use super::quaternion::append_checked;
use crate::clifford::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::ncpoly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R03Term {
    pub point: usize,
    /// Vanishes at every other point; roots appended in input order.
    pub vanishing: Polynomial,
    pub normalizer: Multivector,
    pub lagrange: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R03Interpolation {
    pub terms: Vec<R03Term>,
    pub polynomial: Polynomial,
}

pub fn interpolate_r03(problem: &InterpolationProblem) -> Result<Polynomial> {
    interpolate_r03_detailed(problem).map(|r| r.polynomial)
}

pub fn interpolate_r03_detailed(problem: &InterpolationProblem) -> Result<R03Interpolation> {
    let sig = problem.sig();
    if !sig.is_r03() {
        return Err(Error::WrongSignature {
            expected: Signature::R03,
            found: sig,
        });
    }
    group_by_class(problem)?;
    let n = problem.len();
    let mut terms = Vec::with_capacity(n);
    let mut polynomial = Polynomial::zero(sig);
    for j in 0..n {
        let vanishing = (0..n)
            .filter(|&i| i != j)
            .try_fold(Polynomial::one(sig), |acc, i| {
                append_checked(&acc, problem.point(i))
            })?;
        let normalizer = vanishing
            .eval(problem.point(j))?
            .inverse()
            .map_err(|_| Error::InternalNonInvertible)?;
        let lagrange = vanishing.mul_right(&normalizer)?;
        polynomial = polynomial.add(&lagrange.mul_right(problem.value(j))?)?;
        terms.push(R03Term {
            point: j,
            vanishing,
            normalizer,
            lagrange,
        });
    }
    Ok(R03Interpolation { terms, polynomial })
}
