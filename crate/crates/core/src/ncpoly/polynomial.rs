use num_traits::Zero;

use crate::clifford::{Multivector, Signature};
use crate::error::Result;
use crate::scalar::Rational;

/// `P(X) = sum_h X^h a_h` with Clifford coefficients written on the right.
///
/// The indeterminate commutes with coefficients under [`Polynomial::star`],
/// and evaluation places powers of the point on the left:
/// `P(x) = sum_h x^h a_h`. Trailing zero coefficients are never stored, so the
/// zero polynomial has no coefficients and degree `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    sig: Signature,
    coeffs: Vec<Multivector>,
}

impl Polynomial {
    pub fn new(sig: Signature, coeffs: Vec<Multivector>) -> Result<Self> {
        for c in &coeffs {
            sig.expect(c.sig())?;
        }
        Ok(Self::trimmed(sig, coeffs))
    }

    fn trimmed(sig: Signature, mut coeffs: Vec<Multivector>) -> Self {
        while coeffs.last().is_some_and(Multivector::is_zero) {
            coeffs.pop();
        }
        Polynomial { sig, coeffs }
    }

    pub fn zero(sig: Signature) -> Self {
        Polynomial {
            sig,
            coeffs: Vec::new(),
        }
    }

    pub fn one(sig: Signature) -> Self {
        Self::constant(Multivector::one(sig))
    }

    pub fn constant(c: Multivector) -> Self {
        let sig = c.sig();
        Self::trimmed(sig, vec![c])
    }

    /// The indeterminate `X`.
    pub fn x(sig: Signature) -> Self {
        Polynomial {
            sig,
            coeffs: vec![Multivector::zero(sig), Multivector::one(sig)],
        }
    }

    /// `X - y`.
    pub fn linear(y: &Multivector) -> Self {
        let sig = y.sig();
        Polynomial {
            sig,
            coeffs: vec![-y, Multivector::one(sig)],
        }
    }

    /// Polynomial with real coefficients `c_0, c_1, ...`.
    pub fn from_real(sig: Signature, coeffs: &[Rational]) -> Self {
        Self::trimmed(
            sig,
            coeffs
                .iter()
                .map(|c| Multivector::scalar(sig, c.clone()))
                .collect(),
        )
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[Multivector] {
        &self.coeffs
    }

    /// Coefficient of `X^h`, zero past the degree.
    pub fn coeff(&self, h: usize) -> Multivector {
        self.coeffs
            .get(h)
            .cloned()
            .unwrap_or_else(|| Multivector::zero(self.sig))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Multivector> {
        self.coeffs.last()
    }

    pub fn has_real_coefficients(&self) -> bool {
        self.coeffs.iter().all(Multivector::is_scalar)
    }

    /// `P(x) = sum_h x^h a_h`, by Horner's rule from the left.
    pub fn eval(&self, x: &Multivector) -> Result<Multivector> {
        self.sig.expect(x.sig())?;
        let mut acc = Multivector::zero(self.sig);
        for a in self.coeffs.iter().rev() {
            acc = &(x * &acc) + a;
        }
        Ok(acc)
    }

    /// The product with `X` central: the coefficient of `X^n` is
    /// `sum_{h+k=n} a_h b_k`.
    pub fn star(&self, other: &Polynomial) -> Result<Polynomial> {
        self.sig.expect(other.sig)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.sig));
        }
        let mut out = vec![Multivector::zero(self.sig); self.coeffs.len() + other.coeffs.len() - 1];
        for (h, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in other.coeffs.iter().enumerate() {
                out[h + k] += &(a * b);
            }
        }
        Ok(Self::trimmed(self.sig, out))
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.sig.expect(other.sig)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|h| &self.coeff(h) + &other.coeff(h)).collect();
        Ok(Self::trimmed(self.sig, coeffs))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.sig.expect(other.sig)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|h| &self.coeff(h) - &other.coeff(h)).collect();
        Ok(Self::trimmed(self.sig, coeffs))
    }

    /// `P(X) c`: every coefficient multiplied by `c` on the right.
    pub fn mul_right(&self, c: &Multivector) -> Result<Polynomial> {
        self.sig.expect(c.sig())?;
        Ok(Self::trimmed(
            self.sig,
            self.coeffs.iter().map(|a| a * c).collect(),
        ))
    }

    pub fn scale(&self, r: &Rational) -> Polynomial {
        Self::trimmed(self.sig, self.coeffs.iter().map(|a| a.scale(r)).collect())
    }

    /// `(P . Q)(x)` through `P(x) Q(P(x)^-1 x P(x))`, valid when `P(x)` is
    /// invertible.
    pub fn eval_of_product(p: &Polynomial, q: &Polynomial, x: &Multivector) -> Result<Multivector> {
        p.sig.expect(q.sig)?;
        let px = p.eval(x)?;
        let moved = x.conjugate_by(&px)?;
        Ok(&px * &q.eval(&moved)?)
    }

    /// Remainder division by `X - y` on the left: returns `(Q, r)` with
    /// `P = (X - y) . Q + r`, so that `r = P(y)`.
    ///
    /// The quotient follows `c_{d-1} = a_d`, `c_{k-1} = a_k + y c_k`.
    pub fn left_divide_linear(&self, y: &Multivector) -> Result<(Polynomial, Multivector)> {
        self.sig.expect(y.sig())?;
        let Some(d) = self.degree() else {
            return Ok((Self::zero(self.sig), Multivector::zero(self.sig)));
        };
        if d == 0 {
            return Ok((Self::zero(self.sig), self.coeffs[0].clone()));
        }
        let mut quotient = vec![Multivector::zero(self.sig); d];
        quotient[d - 1] = self.coeffs[d].clone();
        for k in (1..d).rev() {
            quotient[k - 1] = &self.coeffs[k] + &(y * &quotient[k]);
        }
        let remainder = &self.coeffs[0] + &(y * &quotient[0]);
        Ok((Self::trimmed(self.sig, quotient), remainder))
    }

    /// `T . (X - T(y)^-1 y T(y))`, which vanishes at `y` and at every root of
    /// `T`.
    pub fn append_root(&self, y: &Multivector) -> Result<Polynomial> {
        let ty = self.eval(y)?;
        let moved = y.conjugate_by(&ty)?;
        self.star(&Polynomial::linear(&moved))
    }

    /// Division by a monic polynomial with real coefficients. Such a divisor
    /// is central, so left and right division agree. Returns `(Q, R)` with
    /// `P = D . Q + R` and `deg R < deg D`.
    pub fn div_rem_real_monic(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.sig.expect(divisor.sig)?;
        let dd = divisor
            .degree()
            .expect("divisor must be a nonzero monic real polynomial");
        assert!(
            divisor.has_real_coefficients() && divisor.coeffs[dd].is_one(),
            "divisor must be monic with real coefficients"
        );
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(self.sig), self.clone()));
        }
        let mut quotient = vec![Multivector::zero(self.sig); rem.len() - dd];
        for k in (0..quotient.len()).rev() {
            let lead = rem[k + dd].clone();
            if lead.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let r = d.scalar_part();
                if !r.is_zero() {
                    rem[k + i] = &rem[k + i] - &lead.scale(r);
                }
            }
            quotient[k] = lead;
        }
        rem.truncate(dd);
        Ok((
            Self::trimmed(self.sig, quotient),
            Self::trimmed(self.sig, rem),
        ))
    }
}
