//! Approximate decimal rendering, mirroring the exact text forms.

use clifflag::clifford::blade_name;
use clifflag::scalar::to_decimal;
use clifflag::{Multivector, Polynomial};
use num_traits::{Signed, Zero};

pub fn decimal_multivector(x: &Multivector, digits: usize) -> String {
    let mut out = String::new();
    for (mask, c) in x.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let magnitude = to_decimal(&c.abs(), digits);
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        out.push_str(&magnitude);
        if mask != 0 {
            out.push(' ');
            out.push_str(&blade_name(mask));
        }
    }
    if out.is_empty() {
        out.push_str(&to_decimal(&Zero::zero(), digits));
    }
    out
}

pub fn decimal_polynomial(p: &Polynomial, digits: usize) -> String {
    if p.is_zero() {
        return format!(
            "({})",
            decimal_multivector(&Multivector::zero(p.sig()), digits)
        );
    }
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, a)| !a.is_zero())
        .map(|(h, a)| {
            let body = decimal_multivector(a, digits);
            match h {
                0 => format!("({body})"),
                1 => format!("X*({body})"),
                _ => format!("X^{h}*({body})"),
            }
        })
        .collect();
    terms.join(" + ")
}
