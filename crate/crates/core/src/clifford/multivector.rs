use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::signature::{blade_grade, blade_sign, Signature};
use crate::error::{Error, Result};
use crate::scalar::{int, Rational};

/// A dense element of R(p,q) with exact rational coordinates.
///
/// Coordinate `b` belongs to the blade whose bitmask is `b`: bit `i - 1` is set
/// exactly when `e_i` is a factor. Index 0 is the unit.
///
/// The arithmetic operators panic on mixed signatures; use
/// [`Multivector::product`] and friends for a checked variant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    sig: Signature,
    coeffs: Vec<Rational>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: vec![Rational::zero(); sig.blade_count()],
        }
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, Rational::one())
    }

    pub fn scalar(sig: Signature, value: Rational) -> Self {
        let mut out = Self::zero(sig);
        out.coeffs[0] = value;
        out
    }

    /// The basis blade with bitmask `mask`.
    pub fn blade(sig: Signature, mask: usize) -> Self {
        assert!(mask < sig.blade_count(), "blade {mask:#b} outside {sig}");
        let mut out = Self::zero(sig);
        out.coeffs[mask] = Rational::one();
        out
    }

    /// The generator `e_i`, `1 <= i <= p + q`.
    pub fn generator(sig: Signature, i: usize) -> Self {
        assert!(i >= 1 && i <= sig.dim(), "generator e{i} outside {sig}");
        Self::blade(sig, 1 << (i - 1))
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != sig.blade_count() {
            return Err(Error::BadLength {
                expected: sig.blade_count(),
                found: coeffs.len(),
            });
        }
        Ok(Multivector { sig, coeffs })
    }

    /// Integer coordinates in bitmask order. Panics on a length mismatch.
    pub fn from_ints(sig: Signature, coeffs: &[i64]) -> Self {
        Self::from_coeffs(sig, coeffs.iter().map(|&c| int(c)).collect())
            .expect("coordinate count must equal 2^(p+q)")
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: usize) -> &Rational {
        &self.coeffs[mask]
    }

    pub fn scalar_part(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// True when every non-unit coordinate vanishes.
    pub fn is_scalar(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// True on the span of `1, e_1, ..., e_m`.
    pub fn is_paravector(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(mask, c)| blade_grade(mask) <= 1 || c.is_zero())
    }

    /// The grade-`k` part `[x]_k`.
    pub fn grade(&self, k: u32) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(mask, c)| {
                if blade_grade(mask) == k {
                    c.clone()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Multivector {
            sig: self.sig,
            coeffs,
        }
    }

    /// Squared euclidean length of the coordinate vector.
    pub fn euclidean_norm_sq(&self) -> Rational {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.sig.expect(other.sig)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.sig.expect(other.sig)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.sig.expect(other.sig)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        Multivector {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = vec![Rational::zero(); self.coeffs.len()];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let term = x * y;
                if blade_sign(self.sig, a, b) > 0 {
                    out[a ^ b] += term;
                } else {
                    out[a ^ b] -= term;
                }
            }
        }
        Multivector {
            sig: self.sig,
            coeffs: out,
        }
    }

    /// Clifford conjugation: the grade-`k` part is multiplied by
    /// `(-1)^(k(k+1)/2)`, giving the sign pattern `+ - - + + - - + ...`.
    pub fn conjugate(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(mask, c)| {
                let k = blade_grade(mask);
                if matches!(k % 4, 0 | 3) {
                    c.clone()
                } else {
                    -c
                }
            })
            .collect();
        Multivector {
            sig: self.sig,
            coeffs,
        }
    }

    /// `t(x) = x + x^c`.
    pub fn trace(&self) -> Self {
        self + &self.conjugate()
    }

    /// `n(x) = x x^c`.
    pub fn norm(&self) -> Self {
        self * &self.conjugate()
    }

    /// `x^h`; `x^0` is the unit.
    pub fn pow(&self, exp: usize) -> Self {
        let mut out = Self::one(self.sig);
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    /// `a^-1 x a`.
    pub fn conjugate_by(&self, a: &Self) -> Result<Self> {
        Ok(&(&a.inverse()? * self) * a)
    }

    /// Matrix of `y -> self * y` in the blade basis; entry `[r][c]` is the
    /// `r`-th coordinate of `self * e_c`.
    pub fn left_mul_matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.coeffs.len();
        let mut m = vec![vec![Rational::zero(); n]; n];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, row) in m.iter_mut().enumerate() {
                let c = a ^ r;
                if blade_sign(self.sig, a, c) > 0 {
                    row[c] += x;
                } else {
                    row[c] -= x;
                }
            }
        }
        m
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.checked_add(rhs)
            .expect("signature mismatch in addition")
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in addition");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.checked_sub(rhs)
            .expect("signature mismatch in subtraction")
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.product(rhs).expect("signature mismatch in product")
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        &self * &rhs
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}
