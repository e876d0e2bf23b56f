//! Text form of polynomials: `X^3*(e1) + X^2*(1) + (1)`.
//!
//! Terms are printed in descending degree; the linear term is `X*(..)` and the
//! constant term is a bare parenthesised multivector. The zero polynomial
//! prints as `(0)`. The parser also accepts `X^1*` and `X^0*` and repeated
//! degrees, which are summed.

use std::fmt;

use super::polynomial::Polynomial;
use crate::clifford::{Multivector, Signature};
use crate::error::{Error, Result};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        let mut first = true;
        for (h, a) in self.coeffs().iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match h {
                0 => write!(f, "({a})")?,
                1 => write!(f, "X*({a})")?,
                _ => write!(f, "X^{h}*({a})")?,
            }
        }
        Ok(())
    }
}

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

/// Split at `+` signs outside parentheses, keeping byte offsets.
fn split_terms(src: &str) -> Result<Vec<(usize, &str)>> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut terms = Vec::new();
    for (i, ch) in src.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(parse_err(i, "unbalanced ')'"));
                }
            }
            '+' if depth == 0 => {
                terms.push((start, &src[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(parse_err(src.len(), "unclosed '('"));
    }
    terms.push((start, &src[start..]));
    Ok(terms)
}

fn parse_term(sig: Signature, offset: usize, term: &str) -> Result<(usize, Multivector)> {
    let lead = term.len() - term.trim_start().len();
    let t = term.trim();
    let at = offset + lead;
    let (degree, rest) = if let Some(after_x) = t.strip_prefix('X') {
        let (degree, after) = if let Some(exp) = after_x.strip_prefix('^') {
            let digits: String = exp.chars().take_while(char::is_ascii_digit).collect();
            if digits.is_empty() {
                return Err(parse_err(at + 2, "expected exponent after '^'"));
            }
            let degree = digits
                .parse::<usize>()
                .map_err(|_| parse_err(at + 2, "exponent too large"))?;
            (degree, &exp[digits.len()..])
        } else {
            (1, after_x)
        };
        let after = after.trim_start();
        let Some(after) = after.strip_prefix('*') else {
            return Err(parse_err(at, "expected '*' after the power of X"));
        };
        (degree, after.trim_start())
    } else {
        (0, t)
    };
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| parse_err(at, "coefficient must be parenthesised"))?;
    let coeff = Multivector::parse(sig, inner).map_err(|e| match e {
        Error::Parse { pos, msg } => parse_err(at + (t.len() - rest.len()) + 1 + pos, msg),
        other => other,
    })?;
    Ok((degree, coeff))
}

impl Polynomial {
    /// Parse the text form under the given signature.
    pub fn parse(sig: Signature, src: &str) -> Result<Polynomial> {
        if src.trim().is_empty() {
            return Err(parse_err(0, "empty polynomial"));
        }
        let mut coeffs: Vec<Multivector> = Vec::new();
        for (offset, term) in split_terms(src)? {
            let (degree, c) = parse_term(sig, offset, term)?;
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, Multivector::zero(sig));
            }
            coeffs[degree] += &c;
        }
        Polynomial::new(sig, coeffs)
    }
}
