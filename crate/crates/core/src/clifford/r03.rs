//! Structure specific to R(0,3): the central pseudoscalar `e123`, the
//! invertibility test through `psi_+ psi_-`, and the splitting
//! R(0,3) = H + H along the central idempotents `(1 +- e123)/2`.
//!
//! With `x = x0 + x1 e1 + x2 e2 + x12 e12 + x3 e3 + x13 e13 + x23 e23 + x123 e123`
//! one has `e3 = -e12 e123`, `e13 = e2 e123` and `e23 = -e1 e123`, so
//!
//! ```text
//! x (1 +- e123)/2  <->  (x0 +- x123) + (x1 -+ x23) i + (x2 +- x13) j + (x12 -+ x3) k
//! ```
//!
//! where `i, j, k` are the images of `e1, e2, e12`. The squared length of each
//! component is `psi_+-(x)`.

use super::multivector::Multivector;
use super::signature::Signature;
use crate::error::{Error, Result};
use crate::scalar::{int, Rational};

const E1: usize = 0b001;
const E2: usize = 0b010;
const E12: usize = 0b011;
const E3: usize = 0b100;
const E13: usize = 0b101;
const E23: usize = 0b110;
const E123: usize = 0b111;

fn require_r03(x: &Multivector) -> Result<()> {
    if x.sig().is_r03() {
        Ok(())
    } else {
        Err(Error::WrongSignature {
            expected: Signature::R03,
            found: x.sig(),
        })
    }
}

/// `phi(x) = 2 (x0 x123 - x1 x23 + x2 x13 - x3 x12)`, the `e123` part of `n(x)`.
pub fn phi(x: &Multivector) -> Result<Rational> {
    require_r03(x)?;
    let c = |m| x.coeff(m);
    Ok(int(2) * (c(0) * c(E123) - c(E1) * c(E23) + c(E2) * c(E13) - c(E3) * c(E12)))
}

fn psi(x: &Multivector, sign: i64) -> Result<Rational> {
    require_r03(x)?;
    let s = int(sign);
    let c = |m| x.coeff(m);
    let a = c(0) + &s * c(E123);
    let b = c(E1) - &s * c(E23);
    let d = c(E2) + &s * c(E13);
    let e = c(E3) - &s * c(E12);
    Ok(&a * &a + &b * &b + &d * &d + &e * &e)
}

pub fn psi_plus(x: &Multivector) -> Result<Rational> {
    psi(x, 1)
}

pub fn psi_minus(x: &Multivector) -> Result<Rational> {
    psi(x, -1)
}

/// The two quaternionic components of `x`, images under `x -> x (1 +- e123)/2`.
pub fn split_h_plus_h(x: &Multivector) -> Result<(Multivector, Multivector)> {
    require_r03(x)?;
    let c = |m| x.coeff(m);
    let component = |s: Rational| {
        Multivector::from_coeffs(
            Signature::QUATERNIONS,
            vec![
                c(0) + &s * c(E123),
                c(E1) - &s * c(E23),
                c(E2) + &s * c(E13),
                c(E12) - &s * c(E3),
            ],
        )
    };
    Ok((component(int(1))?, component(int(-1))?))
}

/// Inverse of [`split_h_plus_h`].
pub fn merge_h_plus_h(plus: &Multivector, minus: &Multivector) -> Result<Multivector> {
    for h in [plus, minus] {
        if !h.sig().is_quaternionic() {
            return Err(Error::WrongSignature {
                expected: Signature::QUATERNIONS,
                found: h.sig(),
            });
        }
    }
    let sum = |a: &Rational, b: &Rational| (a + b) / int(2);
    let diff = |a: &Rational, b: &Rational| (a - b) / int(2);
    let (a, b) = (plus.coeffs(), minus.coeffs());
    let mut out = vec![int(0); 8];
    out[0] = sum(&a[0], &b[0]);
    out[E123] = diff(&a[0], &b[0]);
    out[E1] = sum(&a[1], &b[1]);
    out[E23] = diff(&b[1], &a[1]);
    out[E2] = sum(&a[2], &b[2]);
    out[E13] = diff(&a[2], &b[2]);
    out[E12] = sum(&a[3], &b[3]);
    out[E3] = diff(&b[3], &a[3]);
    Multivector::from_coeffs(Signature::R03, out)
}

/// Cone membership of R(0,3) in coordinates: `x123 = 0` and `phi(x) = 0`.
pub fn in_cone_r03_coordinates(x: &Multivector) -> Result<bool> {
    use num_traits::Zero;
    Ok(x.coeff(E123).is_zero() && phi(x)?.is_zero())
}
