//! Exact rational scalars.
//!
//! Every real number handled by the library is a [`Rational`]: a reduced
//! fraction of arbitrary-precision integers with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Render `value` with exactly `digits` digits after the decimal point,
/// rounding half away from zero.
pub fn to_decimal(value: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = value.abs() * Rational::from_integer(scale.clone());
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let twice = r * 2u8;
    let rounded = if twice >= *scaled.denom() { q + 1u8 } else { q };
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let sign = if value.is_negative() && !(int_part.is_zero() && frac_part.is_zero()) {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    let frac_str = frac_part.to_string();
    format!(
        "{sign}{int_part}.{}{frac_str}",
        "0".repeat(digits - frac_str.len())
    )
}
