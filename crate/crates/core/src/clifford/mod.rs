//! Dense exact multivector arithmetic for R(p,q).

mod cone;
mod inverse;
mod multivector;
pub mod r03;
mod signature;
mod text;

pub use cone::{
    class_of, cone_class, in_quadratic_cone, in_quadratic_cone_r0q, radius_sq, same_class,
    ConjugacyClassId,
};
pub use multivector::Multivector;
pub use signature::{blade_grade, blade_sign, Signature, MAX_DIM};
pub use text::blade_name;
