use num_traits::{One, Zero};

use super::multivector::Multivector;
use super::signature::Signature;
use crate::error::{Error, Result};
use crate::linalg::{self, LinearSolution};
use crate::scalar::Rational;

const E123: usize = 0b111;

impl Multivector {
    /// Two-sided inverse, or [`Error::NotInvertible`] for zero divisors.
    ///
    /// In R(0,2) the norm is real and `x^-1 = x^c / n(x)`. In R(0,3) the norm
    /// `a + b e123` is central and invertible iff `a^2 != b^2`, in which case
    /// `x^-1 = n(x)^-1 x^c`. Every other signature solves the left-regular
    /// system `x y = 1` exactly.
    pub fn inverse(&self) -> Result<Multivector> {
        let sig = self.sig();
        if sig == Signature::QUATERNIONS {
            let n = self.norm();
            debug_assert!(n.is_scalar());
            let n = n.scalar_part();
            if n.is_zero() {
                return Err(Error::NotInvertible);
            }
            return Ok(self.conjugate().scale(&(Rational::one() / n)));
        }
        if sig == Signature::R03 {
            let n = self.norm();
            let a = n.coeff(0);
            let b = n.coeff(E123);
            let det = a * a - b * b;
            if det.is_zero() {
                return Err(Error::NotInvertible);
            }
            let mut coeffs = vec![Rational::zero(); sig.blade_count()];
            coeffs[0] = a / &det;
            coeffs[E123] = -(b / &det);
            let n_inv = Multivector::from_coeffs(sig, coeffs)?;
            return Ok(&n_inv * &self.conjugate());
        }
        self.inverse_by_linear_solve()
    }

    /// Inverse through the left-multiplication matrix, valid in every
    /// signature.
    pub fn inverse_by_linear_solve(&self) -> Result<Multivector> {
        let sig = self.sig();
        let matrix = self.left_mul_matrix();
        let mut rhs = vec![Rational::zero(); sig.blade_count()];
        rhs[0] = Rational::one();
        match linalg::solve(&matrix, &rhs, sig.blade_count()) {
            LinearSolution::Unique(y) => Multivector::from_coeffs(sig, y),
            _ => Err(Error::NotInvertible),
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_ok()
    }
}
