//! Integer 2×2 matrices acting as Möbius transformations on the boundary.
//!
//! Matrices are kept with BigInt entries and compared projectively (up to an
//! overall sign). The named constructors cover the generators used
//! throughout: the three reflections fixing two of the boundary symbols
//! {0, 1, inf}, the symbol permutation group they conjugate under, and the
//! two parabolic letters of cutting sequences.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::class::Symbol;
use crate::exact::surd::{ExtendedReal, QuadraticSurd};
use crate::exact::ExtRational;

/// Row-major [[a, b], [c, d]], acting on z as (az + b)/(cz + d).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub e: [[BigInt; 2]; 2],
}

impl Mat2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Mat2 {
        Mat2 {
            e: [[a.into(), b.into()], [c.into(), d.into()]],
        }
    }

    pub fn identity() -> Mat2 {
        Mat2::new(1, 0, 0, 1)
    }

    /// Reflection fixing the two boundary symbols other than `s`:
    /// z ↦ 2 - z, -z, z/(2z - 1) for s = 0, 1, inf respectively.
    pub fn reflection(s: Symbol) -> Mat2 {
        match s {
            Symbol::Zero => Mat2::new(-1, 2, 0, 1),
            Symbol::One => Mat2::new(-1, 0, 0, 1),
            Symbol::Inf => Mat2::new(1, 0, 2, -1),
        }
    }

    /// z ↦ 1/z, swapping 0 and inf.
    pub fn j() -> Mat2 {
        Mat2::new(0, 1, 1, 0)
    }

    /// z ↦ 1 - z, swapping 0 and 1.
    pub fn k() -> Mat2 {
        Mat2::new(-1, 1, 0, 1)
    }

    /// z ↦ z + 1.
    pub fn l() -> Mat2 {
        Mat2::new(1, 1, 0, 1)
    }

    /// z ↦ z - 1.
    pub fn l_inv() -> Mat2 {
        Mat2::new(1, -1, 0, 1)
    }

    /// z ↦ z/(z + 1).
    pub fn r() -> Mat2 {
        Mat2::new(1, 0, 1, 1)
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let a = &self.e[0][0] * &other.e[0][0] + &self.e[0][1] * &other.e[1][0];
        let b = &self.e[0][0] * &other.e[0][1] + &self.e[0][1] * &other.e[1][1];
        let c = &self.e[1][0] * &other.e[0][0] + &self.e[1][1] * &other.e[1][0];
        let d = &self.e[1][0] * &other.e[0][1] + &self.e[1][1] * &other.e[1][1];
        Mat2 {
            e: [[a, b], [c, d]],
        }
    }

    pub fn det(&self) -> BigInt {
        &self.e[0][0] * &self.e[1][1] - &self.e[0][1] * &self.e[1][0]
    }

    /// Adjugate [[d, -b], [-c, a]]; the projective inverse for any
    /// nonsingular matrix since M · adj(M) = det(M) · I.
    pub fn adjugate(&self) -> Mat2 {
        Mat2 {
            e: [
                [self.e[1][1].clone(), -self.e[0][1].clone()],
                [-self.e[1][0].clone(), self.e[0][0].clone()],
            ],
        }
    }

    pub fn pow(&self, k: u64) -> Mat2 {
        let mut acc = Mat2::identity();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Projective normal form: flip the overall sign so the bottom row's
    /// first nonzero entry is positive (any nonsingular integer matrix has
    /// one).
    pub fn canonical(&self) -> Mat2 {
        let lead = if !self.e[1][0].is_zero() {
            &self.e[1][0]
        } else {
            &self.e[1][1]
        };
        if lead.is_negative() {
            Mat2 {
                e: [
                    [-self.e[0][0].clone(), -self.e[0][1].clone()],
                    [-self.e[1][0].clone(), -self.e[1][1].clone()],
                ],
            }
        } else {
            self.clone()
        }
    }

    pub fn proj_eq(&self, other: &Mat2) -> bool {
        self.canonical() == other.canonical()
    }

    /// Möbius action on a surd or infinity.
    pub fn apply(&self, x: &ExtendedReal) -> ExtendedReal {
        match x {
            ExtendedReal::Infinity => {
                // (a·∞ + b)/(c·∞ + d) = a/c
                if self.e[1][0].is_zero() {
                    ExtendedReal::Infinity
                } else {
                    ExtendedReal::Finite(
                        QuadraticSurd::new(
                            self.e[0][0].clone(),
                            BigInt::zero(),
                            self.e[1][0].clone(),
                            BigInt::one(),
                        )
                        .expect("nonzero denominator"),
                    )
                }
            }
            ExtendedReal::Finite(v) => {
                let num = v
                    .mul_int(&self.e[0][0])
                    .add(&QuadraticSurd::from_int(self.e[0][1].clone()))
                    .expect("integer shift is always compatible");
                let den = v
                    .mul_int(&self.e[1][0])
                    .add(&QuadraticSurd::from_int(self.e[1][1].clone()))
                    .expect("integer shift is always compatible");
                if den.is_zero() {
                    ExtendedReal::Infinity
                } else {
                    ExtendedReal::Finite(num.div(&den).expect("same-field division"))
                }
            }
        }
    }

    /// Möbius action on an extended rational via the vector action on
    /// (numerator, denominator).
    pub fn apply_rational(&self, x: &ExtRational) -> ExtRational {
        let (p, q) = x.as_fraction();
        let np = &self.e[0][0] * &p + &self.e[0][1] * &q;
        let nq = &self.e[1][0] * &p + &self.e[1][1] * &q;
        ExtRational::from_fraction(np, nq)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{}],[{},{}]]",
            self.e[0][0], self.e[0][1], self.e[1][0], self.e[1][1]
        )
    }
}

/// True iff gcd(p, q) = 1 (the all-zero vector is not primitive).
pub fn is_primitive(p: &BigInt, q: &BigInt) -> bool {
    p.gcd(q).is_one()
}

/// Parity class of a primitive integer vector (p, q), read as the fraction
/// p/q on the boundary.
pub fn vector_class(p: &BigInt, q: &BigInt) -> Symbol {
    crate::class::parity_of(p, q)
}

/// Convenience: exact rational p/q as a surd-compatible value.
pub fn rational_surd(p: impl Into<BigInt>, q: impl Into<BigInt>) -> QuadraticSurd {
    QuadraticSurd::from_rational(&BigRational::new(p.into(), q.into()))
}
