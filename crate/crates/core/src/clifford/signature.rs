use std::fmt;

use crate::error::{Error, Result};

/// Largest supported `p + q`.
pub const MAX_DIM: u8 = 6;

/// Signature `(p, q)` of the real Clifford algebra R(p,q): `e_i^2 = +1` for
/// `i <= p` and `e_i^2 = -1` for `p < i <= p + q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    /// The quaternions, with `i = e1`, `j = e2`, `k = e12`.
    pub const QUATERNIONS: Signature = Signature { p: 0, q: 2 };
    pub const R03: Signature = Signature { p: 0, q: 3 };

    pub fn new(p: u8, q: u8) -> Result<Self> {
        Self::with_cap(p, q, MAX_DIM)
    }

    /// Like [`Signature::new`] with a lower dimension cap. Caps above
    /// [`MAX_DIM`] are clamped.
    pub fn with_cap(p: u8, q: u8, cap: u8) -> Result<Self> {
        let cap = cap.min(MAX_DIM);
        if u16::from(p) + u16::from(q) > u16::from(cap) {
            return Err(Error::SignatureTooLarge { p, q, cap });
        }
        Ok(Signature { p, q })
    }

    pub fn p(self) -> u8 {
        self.p
    }

    pub fn q(self) -> u8 {
        self.q
    }

    /// Number of generators `m = p + q`.
    pub fn dim(self) -> usize {
        usize::from(self.p + self.q)
    }

    /// Number of basis blades, `2^m`.
    pub fn blade_count(self) -> usize {
        1 << self.dim()
    }

    /// Bitmask of the generators squaring to `-1`.
    pub(crate) fn negative_mask(self) -> usize {
        ((1usize << self.q) - 1) << self.p
    }

    pub fn is_quaternionic(self) -> bool {
        self == Self::QUATERNIONS
    }

    pub fn is_r03(self) -> bool {
        self == Self::R03
    }

    pub(crate) fn expect(self, other: Signature) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                left: self,
                right: other,
            })
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Sign of the blade product `e_A e_B = sign * e_{A xor B}` for blade bitmasks
/// `a` and `b`: the parity of the transpositions needed to sort the
/// concatenated indices, times the squares of the shared generators.
pub fn blade_sign(sig: Signature, a: usize, b: usize) -> i8 {
    let mut swaps = 0u32;
    let mut rest = a >> 1;
    while rest != 0 {
        swaps += (rest & b).count_ones();
        rest >>= 1;
    }
    swaps += (a & b & sig.negative_mask()).count_ones();
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Grade (number of generators) of a blade bitmask.
pub fn blade_grade(mask: usize) -> u32 {
    mask.count_ones()
}
