//! Polynomials with right Clifford coefficients.

mod census;
mod classes;
mod polynomial;
mod text;

pub use census::{char_divisibility, paravector_root_census, real_root_multiplicity, RootCensus};
pub use classes::{affine_restriction, roots_in_class, AffineRestriction, Component, RootSet};
pub use polynomial::Polynomial;
