//! Brute-force interpolation by exact linear algebra.
//!
//! Evaluation `sum_h x^h a_h` is real-linear in the coordinates of the
//! coefficients, so each data point contributes `2^m` scalar equations.

use super::problem::InterpolationProblem;
use crate::clifford::Multivector;
use crate::linalg::{solve, LinearSolution};
use crate::ncpoly::Polynomial;
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    UniqueSolution(Polynomial),
    NoSolution,
    /// Solutions form an affine space of the given dimension; `particular`
    /// is one member.
    AffineFamily {
        particular: Polynomial,
        dimension: usize,
    },
}

/// Classify the interpolants of degree at most `max_degree`.
pub fn brute_force_interpolate(problem: &InterpolationProblem, max_degree: usize) -> OracleOutcome {
    let sig = problem.sig();
    let n = sig.blade_count();
    let unknowns = n * (max_degree + 1);
    let mut matrix: Vec<Vec<Rational>> = Vec::with_capacity(n * problem.len());
    let mut rhs = Vec::with_capacity(n * problem.len());
    for (x, w) in problem.pairs() {
        let blocks: Vec<Vec<Vec<Rational>>> = (0..=max_degree)
            .map(|h| x.pow(h).left_mul_matrix())
            .collect();
        for r in 0..n {
            matrix.push(
                blocks
                    .iter()
                    .flat_map(|block| block[r].iter().cloned())
                    .collect(),
            );
            rhs.push(w.coeff(r).clone());
        }
    }
    let to_poly = |coords: Vec<Rational>| {
        let coeffs = coords
            .chunks(n)
            .map(|c| {
                Multivector::from_coeffs(sig, c.to_vec()).expect("chunk has blade_count entries")
            })
            .collect();
        Polynomial::new(sig, coeffs).expect("coefficients share the signature")
    };
    match solve(&matrix, &rhs, unknowns) {
        LinearSolution::Unique(y) => OracleOutcome::UniqueSolution(to_poly(y)),
        LinearSolution::Inconsistent => OracleOutcome::NoSolution,
        LinearSolution::Family {
            particular,
            nullity,
        } => OracleOutcome::AffineFamily {
            particular: to_poly(particular),
            dimension: nullity,
        },
    }
}
