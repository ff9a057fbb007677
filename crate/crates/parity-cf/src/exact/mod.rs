//! Exact number and matrix types: quadratic surds, extended rationals,
//! integer Möbius matrices, and the symbol permutation group.

pub mod mat2;
pub mod perm;
pub mod surd;

use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use crate::class::{parity_of, ParityClass};

pub use mat2::{is_primitive, rational_surd, vector_class, Mat2};
pub use perm::PermS3;
pub use surd::{ExtendedReal, QuadraticSurd};

/// A rational number or the point at infinity (1/0), as found on the
/// boundary circle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtRational {
    Finite(BigRational),
    Infinity,
}

impl ExtRational {
    /// Build from a (not necessarily reduced) fraction; q = 0 gives
    /// infinity. (0, 0) is rejected as meaningless.
    pub fn from_fraction(p: BigInt, q: BigInt) -> ExtRational {
        if q.is_zero() {
            assert!(!p.is_zero(), "0/0 is not a boundary point");
            ExtRational::Infinity
        } else {
            ExtRational::Finite(BigRational::new(p, q))
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> ExtRational {
        ExtRational::Finite(BigRational::from_integer(n.into()))
    }

    /// Reduced (numerator, denominator) with denominator ≥ 0; infinity is
    /// (1, 0).
    pub fn as_fraction(&self) -> (BigInt, BigInt) {
        match self {
            ExtRational::Finite(r) => (r.numer().clone(), r.denom().clone()),
            ExtRational::Infinity => (BigInt::from(1), BigInt::zero()),
        }
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            ExtRational::Finite(r) => Some(r),
            ExtRational::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ExtRational::Infinity)
    }

    /// Parity class; infinity is odd/even by convention (1/0).
    pub fn parity(&self) -> ParityClass {
        let (p, q) = self.as_fraction();
        parity_of(&p, &q)
    }
}

impl From<BigRational> for ExtRational {
    fn from(r: BigRational) -> Self {
        ExtRational::Finite(r)
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            ExtRational::Infinity => write!(f, "inf"),
        }
    }
}

impl ParityClass {
    /// The boundary point carrying this symbol: 0 = 0/1, 1 = 1/1, inf = 1/0.
    /// Each lies in its own parity class.
    pub fn as_point(self) -> ExtRational {
        match self {
            ParityClass::Zero => ExtRational::from_int(0),
            ParityClass::One => ExtRational::from_int(1),
            ParityClass::Inf => ExtRational::Infinity,
        }
    }
}
