//! Lagrange interpolation over the quaternions and R(0,3).

mod oracle;
mod problem;
mod quaternion;
mod r03;

pub use oracle::{brute_force_interpolate, OracleOutcome};
pub use problem::{
    check_collinearity, group_by_class, residuals, verify_interpolant, ClassGroup, ClassGrouping,
    Collinearity, InterpolationProblem,
};
pub use quaternion::{
    interpolate_quaternion, interpolate_quaternion_detailed, LagrangeTerm, QuaternionInterpolation,
};
pub use r03::{interpolate_r03, interpolate_r03_detailed, R03Interpolation, R03Term};

use crate::error::{Error, Result};
use crate::ncpoly::Polynomial;

/// Interpolate with the construction matching the problem's signature.
/// An empty problem yields the zero polynomial.
pub fn interpolate(problem: &InterpolationProblem) -> Result<Polynomial> {
    let sig = problem.sig();
    if sig.is_quaternionic() {
        interpolate_quaternion(problem)
    } else if sig.is_r03() {
        interpolate_r03(problem)
    } else {
        Err(Error::UnsupportedSignature(sig))
    }
}
