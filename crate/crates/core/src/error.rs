use thiserror::Error;

use crate::clifford::{ConjugacyClassId, Signature};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("signature ({p},{q}) exceeds the dimension cap {cap}")]
    SignatureTooLarge { p: u8, q: u8, cap: u8 },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("operation requires signature {expected}, got {found}")]
    WrongSignature {
        expected: Signature,
        found: Signature,
    },

    #[error("operation is not supported in signature {0}")]
    UnsupportedSignature(Signature),

    #[error("coefficient vector has length {found}, expected {expected}")]
    BadLength { expected: usize, found: usize },

    #[error("operation needs a polynomial of positive degree")]
    ConstantPolynomial,

    #[error("element is not invertible")]
    NotInvertible,

    #[error("element is not in the quadratic cone")]
    NotInCone,

    #[error("sphere class requires 4n > t^2 (t = {trace}, n = {norm})")]
    DegenerateClass { trace: String, norm: String },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },

    #[error("point {0} is not in the quadratic cone")]
    PointNotInCone(usize),

    #[error("points {first} and {second} share the conjugacy class {class}; R(0,3) interpolation needs distinct classes")]
    MultiPointClassInR03 {
        first: usize,
        second: usize,
        class: Box<ConjugacyClassId>,
    },

    #[error("collinearity fails in class group {group} ({class}, anchor {representative}) at member h = {h}")]
    CollinearityViolated {
        group: usize,
        h: usize,
        class: Box<ConjugacyClassId>,
        representative: String,
    },

    #[error("points and values differ in length ({points} vs {values})")]
    LengthMismatch { points: usize, values: usize },

    #[error("vanishing polynomial is not invertible at a data point; construction preconditions were breached")]
    InternalNonInvertible,
}
