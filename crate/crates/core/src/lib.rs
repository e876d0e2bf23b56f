//! Exact arithmetic in real Clifford algebras R(p,q) with `p + q <= 6`,
//! polynomials with right coefficients over them, and Lagrange interpolation
//! over the quaternions R(0,2) and over R(0,3).
//!
//! All scalars are exact rationals, so every identity is checked with literal
//! equality.

pub mod clifford;
pub mod error;
pub mod lagrange;
pub mod linalg;
pub mod ncpoly;
pub mod scalar;

pub use clifford::{ConjugacyClassId, Multivector, Signature};
pub use error::{Error, Result};
pub use ncpoly::Polynomial;
pub use scalar::Rational;
