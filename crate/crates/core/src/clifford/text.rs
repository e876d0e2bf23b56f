//! Text form of multivectors: `3/2 + e1 - 2 e23 + 1/5 e123`.
//!
//! A term is an optional rational literal followed by an optional blade token
//! `e` + strictly ascending generator digits. In R(0,2) the letters `i`, `j`,
//! `k` are accepted for `e1`, `e2`, `e12`. Printing is canonical: blades in
//! bitmask order, unit coefficients dropped, zero printed as `0`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::multivector::Multivector;
use super::signature::Signature;
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Blade token such as `e13`; the unit blade has no token.
pub fn blade_name(mask: usize) -> String {
    let mut s = String::from("e");
    for i in 0..usize::BITS as usize {
        if mask & (1 << i) != 0 {
            s.push_str(&(i + 1).to_string());
        }
    }
    s
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (mask, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let magnitude = c.abs();
            if mask == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&blade_name(mask))?;
            } else {
                write!(f, "{magnitude} {}", blade_name(mask))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn rational(&mut self) -> Result<Option<Rational>> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        let num: BigInt = num.parse().map_err(|_| self.err("bad integer"))?;
        if self.peek() != Some(b'/') {
            return Ok(Some(Rational::from_integer(num)));
        }
        self.pos += 1;
        let den = self
            .digits()
            .ok_or_else(|| self.err("expected denominator after '/'"))?;
        let den: BigInt = den.parse().map_err(|_| self.err("bad integer"))?;
        if den.is_zero() {
            return Err(self.err("zero denominator"));
        }
        Ok(Some(Rational::new(num, den)))
    }

    fn blade(&mut self, sig: Signature) -> Result<Option<usize>> {
        match self.peek() {
            Some(b'e') => {
                self.pos += 1;
                let start = self.pos;
                let mut mask = 0usize;
                let mut last = 0usize;
                while let Some(b) = self.peek().filter(u8::is_ascii_digit) {
                    let i = usize::from(b - b'0');
                    if i == 0 || i > sig.dim() {
                        return Err(self.err(format!("generator e{i} outside {sig}")));
                    }
                    if i <= last {
                        return Err(self.err("blade indices must be strictly ascending"));
                    }
                    last = i;
                    mask |= 1 << (i - 1);
                    self.pos += 1;
                }
                if self.pos == start {
                    return Err(self.err("expected generator digits after 'e'"));
                }
                Ok(Some(mask))
            }
            Some(c @ (b'i' | b'j' | b'k')) if sig.is_quaternionic() => {
                self.pos += 1;
                Ok(Some(match c {
                    b'i' => 0b01,
                    b'j' => 0b10,
                    _ => 0b11,
                }))
            }
            _ => Ok(None),
        }
    }
}

impl Multivector {
    /// Parse the text form under the given signature.
    pub fn parse(sig: Signature, src: &str) -> Result<Multivector> {
        let mut cur = Cursor::new(src);
        let mut coeffs = vec![Rational::zero(); sig.blade_count()];
        cur.skip_ws();
        if cur.peek().is_none() {
            return Err(cur.err("empty multivector"));
        }
        let mut first = true;
        loop {
            cur.skip_ws();
            let negative = match cur.peek() {
                Some(b'+') => {
                    cur.pos += 1;
                    false
                }
                Some(b'-') => {
                    cur.pos += 1;
                    true
                }
                None => break,
                _ if first => false,
                _ => return Err(cur.err("expected '+' or '-' between terms")),
            };
            first = false;
            cur.skip_ws();
            let coeff = cur.rational()?;
            cur.skip_ws();
            let starred = if cur.peek() == Some(b'*') {
                if coeff.is_none() {
                    return Err(cur.err("'*' needs a coefficient before it"));
                }
                cur.pos += 1;
                cur.skip_ws();
                true
            } else {
                false
            };
            let blade = cur.blade(sig)?;
            if starred && blade.is_none() {
                return Err(cur.err("expected a blade after '*'"));
            }
            if coeff.is_none() && blade.is_none() {
                return Err(cur.err("expected a number or a blade"));
            }
            let value = coeff.unwrap_or_else(Rational::one);
            let mask = blade.unwrap_or(0);
            if negative {
                coeffs[mask] -= value;
            } else {
                coeffs[mask] += value;
            }
        }
        Multivector::from_coeffs(sig, coeffs)
    }
}
