//! Exact arithmetic in real quadratic fields.
//!
//! A `QuadraticSurd` stores (a + b*sqrt(d)) / c with integer a, b, d and
//! positive integer c, normalized so that gcd(a, b, c) = 1, square factors of
//! d are folded into b, and rationals always carry d = 1, b = 0. Every
//! operation (ordering, floor, arithmetic) is exact; no floating point is
//! used anywhere.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact element of ℚ(√d): (a + b√d) / c.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

/// Largest trial divisor used when pulling square factors out of a radicand.
/// Radicands up to bound² (10⁸) are reduced to squarefree form exactly;
/// larger ones may keep a missed square factor, which only affects whether
/// two independently built values are recognized as lying in the same field.
const SQUARE_REDUCTION_BOUND: u64 = 10_000;

/// Pull the largest detectable square out of `d`, returning (root, rest) with
/// d = root² · rest.
fn extract_square(d: &BigInt) -> (BigInt, BigInt) {
    let mut rest = d.clone();
    let mut root = BigInt::one();
    let mut k = BigInt::from(2);
    let bound = BigInt::from(SQUARE_REDUCTION_BOUND);
    while &k * &k <= rest && k <= bound {
        let k2 = &k * &k;
        while (&rest % &k2).is_zero() {
            rest /= &k2;
            root *= &k;
        }
        k += 1;
    }
    // The remainder may itself be a perfect square (e.g. a prime > bound,
    // squared).
    let s = rest.sqrt();
    if &s * &s == rest {
        root *= &s;
        rest = BigInt::one();
    }
    (root, rest)
}

impl QuadraticSurd {
    /// Build and normalize (a + b√d)/c. Errors: c = 0, or d ≤ 0 while b ≠ 0.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<QuadraticSurd> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !b.is_zero() && d <= BigInt::zero() {
            return Err(Error::NonPositiveRadicand(d));
        }
        let mut s = QuadraticSurd { a, b, c, d };
        s.normalize();
        Ok(s)
    }

    /// √d for a positive integer d.
    pub fn sqrt_of(d: impl Into<BigInt>) -> Result<QuadraticSurd> {
        QuadraticSurd::new(BigInt::zero(), BigInt::one(), BigInt::one(), d.into())
    }

    pub fn from_rational(r: &BigRational) -> QuadraticSurd {
        QuadraticSurd {
            a: r.numer().clone(),
            b: BigInt::zero(),
            c: r.denom().clone(),
            d: BigInt::one(),
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> QuadraticSurd {
        QuadraticSurd {
            a: n.into(),
            b: BigInt::zero(),
            c: BigInt::one(),
            d: BigInt::one(),
        }
    }

    pub fn zero() -> QuadraticSurd {
        QuadraticSurd::from_int(0)
    }

    fn normalize(&mut self) {
        if self.b.is_zero() {
            self.d = BigInt::one();
        } else {
            let (root, rest) = extract_square(&self.d);
            if !root.is_one() {
                self.b *= &root;
                self.d = rest;
            }
            if self.d.is_one() {
                // √1 collapsed the irrational part.
                let b = std::mem::replace(&mut self.b, BigInt::zero());
                self.a += b;
            }
        }
        if self.c.is_negative() {
            self.a = -std::mem::take(&mut self.a);
            self.b = -std::mem::take(&mut self.b);
            self.c = -std::mem::take(&mut self.c);
        }
        let g = self.a.gcd(&self.b).gcd(&self.c);
        if !g.is_one() && !g.is_zero() {
            self.a /= &g;
            self.b /= &g;
            self.c /= &g;
        }
    }

    pub fn rational_part(&self) -> &BigInt {
        &self.a
    }
    pub fn surd_coeff(&self) -> &BigInt {
        &self.b
    }
    pub fn denom(&self) -> &BigInt {
        &self.c
    }
    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(BigRational::new(self.a.clone(), self.c.clone()))
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Radicand both operands can live under, or an error if they genuinely
    /// differ. Rationals are compatible with everything.
    fn common_radicand(&self, other: &QuadraticSurd) -> Result<BigInt> {
        if self.b.is_zero() {
            Ok(other.d.clone())
        } else if other.b.is_zero() || self.d == other.d {
            Ok(self.d.clone())
        } else {
            Err(Error::MismatchedRadicand(self.d.clone(), other.d.clone()))
        }
    }

    pub fn add(&self, other: &QuadraticSurd) -> Result<QuadraticSurd> {
        let d = self.common_radicand(other)?;
        QuadraticSurd::new(
            &self.a * &other.c + &other.a * &self.c,
            &self.b * &other.c + &other.b * &self.c,
            &self.c * &other.c,
            d,
        )
    }

    pub fn sub(&self, other: &QuadraticSurd) -> Result<QuadraticSurd> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QuadraticSurd) -> Result<QuadraticSurd> {
        let d = self.common_radicand(other)?;
        QuadraticSurd::new(
            &self.a * &other.a + &self.b * &other.b * &d,
            &self.a * &other.b + &self.b * &other.a,
            &self.c * &other.c,
            d,
        )
    }

    pub fn div(&self, other: &QuadraticSurd) -> Result<QuadraticSurd> {
        self.mul(&other.recip()?)
    }

    pub fn neg(&self) -> QuadraticSurd {
        QuadraticSurd {
            a: -&self.a,
            b: -&self.b,
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    pub fn abs(&self) -> QuadraticSurd {
        if self.signum() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// 1/x via the conjugate: c(a − b√d) / (a² − b²d).
    pub fn recip(&self) -> Result<QuadraticSurd> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = &self.a * &self.a - &self.b * &self.b * &self.d;
        QuadraticSurd::new(
            &self.a * &self.c,
            -(&self.b * &self.c),
            norm,
            self.d.clone(),
        )
    }

    pub fn add_rat(&self, r: &BigRational) -> QuadraticSurd {
        self.add(&QuadraticSurd::from_rational(r))
            .expect("rational operand is always compatible")
    }

    pub fn mul_int(&self, n: &BigInt) -> QuadraticSurd {
        self.mul(&QuadraticSurd::from_int(n.clone()))
            .expect("integer operand is always compatible")
    }

    pub fn sub_int(&self, n: &BigInt) -> QuadraticSurd {
        self.add(&QuadraticSurd::from_int(-n.clone()))
            .expect("integer operand is always compatible")
    }

    /// Sign of the value: -1, 0, or +1, decided exactly.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        match (sa, sb) {
            (_, 0) => sa,
            (0, _) => sb,
            (1, 1) => 1,
            (-1, -1) => -1,
            // Opposite signs: compare a² against b²·d, whichever side is
            // positive wins if its square dominates.
            _ => {
                let a2 = &self.a * &self.a;
                let b2d = &self.b * &self.b * &self.d;
                match a2.cmp(&b2d) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => 0, // only possible when √d is rational
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }
    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    /// Exact comparison. Fails only when both sides are irrational with
    /// different radicands.
    pub fn cmp_exact(&self, other: &QuadraticSurd) -> Result<Ordering> {
        Ok(match self.sub(other)?.signum() {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        })
    }

    /// Compare |self| against |other| exactly (via squares, so a common
    /// radicand is still required unless one side is rational).
    pub fn cmp_abs(&self, other: &QuadraticSurd) -> Result<Ordering> {
        let s2 = self.mul(self)?;
        let o2 = other.mul(other)?;
        s2.cmp_exact(&o2)
    }

    pub fn cmp_rat(&self, r: &BigRational) -> Ordering {
        self.cmp_exact(&QuadraticSurd::from_rational(r))
            .expect("rational operand is always compatible")
    }

    /// ⌊x⌋, exact. Uses ⌊(a + b√d)/c⌋ = ⌊(a + ⌊b√d⌋)/c⌋ for c > 0, with
    /// ⌊b√d⌋ = ⌊√(b²d)⌋ for b > 0 and -⌊√(b²d)⌋ - 1 for b < 0 (b√d is
    /// irrational whenever b ≠ 0 here, so the ceiling adjustment is exact).
    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return BigRational::new(self.a.clone(), self.c.clone())
                .floor()
                .to_integer();
        }
        let b2d = &self.b * &self.b * &self.d;
        let s = b2d.sqrt();
        debug_assert_ne!(&s * &s, b2d, "irrational part vanished unexpectedly");
        let floor_bsqrt = if self.b.is_positive() { s } else { -s - 1 };
        (&self.a + floor_bsqrt).div_floor(&self.c)
    }

    pub fn ceil(&self) -> BigInt {
        if self.b.is_zero() {
            return BigRational::new(self.a.clone(), self.c.clone())
                .ceil()
                .to_integer();
        }
        // Irrational, so never an integer.
        self.floor() + 1
    }

    /// x - ⌊x⌋ ∈ [0, 1); exactly zero only for integers.
    pub fn fract(&self) -> QuadraticSurd {
        let f = self.floor();
        self.add(&QuadraticSurd::from_int(-f))
            .expect("integer operand is always compatible")
    }

    /// Decimal expansion of the value truncated toward zero after `digits`
    /// fractional digits. Exact and deterministic; used for rendering.
    pub fn to_decimal(&self, digits: usize) -> String {
        let neg = self.is_negative();
        let y = self.abs();
        let scale = BigInt::from(10).pow(digits as u32);
        let scaled = y.mul_int(&scale).floor();
        let (int_part, frac_part) = scaled.div_rem(&scale);
        let sign = if neg && !scaled.is_zero() { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!(
                "{sign}{int_part}.{:0>width$}",
                frac_part.to_string(),
                width = digits
            )
        }
    }
}

fn sign_of(n: &BigInt) -> i32 {
    if n.is_zero() {
        0
    } else if n.is_negative() {
        -1
    } else {
        1
    }
}

/// Same-field surds are totally ordered; cross-field comparisons are not
/// attempted implicitly.
impl PartialOrd for QuadraticSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.cmp_exact(other).ok()
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            if self.c.is_one() {
                return write!(f, "{}", self.a);
            }
            return write!(f, "{}/{}", self.a, self.c);
        }
        let root = if self.b.is_one() {
            format!("sqrt({})", self.d)
        } else if self.b == BigInt::from(-1) {
            format!("-sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", self.b, self.d)
        };
        let body = if self.a.is_zero() {
            root
        } else if self.b.is_positive() {
            format!("{}+{}", self.a, root)
        } else {
            format!("{}{}", self.a, root)
        };
        if self.c.is_one() {
            if self.a.is_zero() {
                write!(f, "{body}")
            } else {
                write!(f, "({body})")
            }
        } else {
            write!(f, "({body})/{}", self.c)
        }
    }
}

/// A surd or the point at infinity; what Möbius maps act on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendedReal {
    Finite(QuadraticSurd),
    Infinity,
}

impl ExtendedReal {
    pub fn finite(&self) -> Option<&QuadraticSurd> {
        match self {
            ExtendedReal::Finite(x) => Some(x),
            ExtendedReal::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ExtendedReal::Infinity)
    }
}

impl From<QuadraticSurd> for ExtendedReal {
    fn from(x: QuadraticSurd) -> Self {
        ExtendedReal::Finite(x)
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::Finite(x) => write!(f, "{x}"),
            ExtendedReal::Infinity => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surd(a: i64, b: i64, c: i64, d: i64) -> QuadraticSurd {
        QuadraticSurd::new(a.into(), b.into(), c.into(), d.into()).unwrap()
    }

    #[test]
    fn normalization() {
        // √8 = 2√2
        let s = surd(0, 1, 1, 8);
        assert_eq!(s.radicand(), &BigInt::from(2));
        assert_eq!(s.surd_coeff(), &BigInt::from(2));
        // √9 collapses to the rational 3
        let t = surd(1, 1, 2, 9);
        assert!(t.is_rational());
        assert_eq!(
            t.to_rational().unwrap(),
            BigRational::new(2.into(), 1.into())
        );
        // sign of the denominator moves to the numerator
        let u = QuadraticSurd::new(1.into(), 1.into(), (-2).into(), 5.into()).unwrap();
        assert_eq!(u.denom(), &BigInt::from(2));
        assert!(u.is_negative());
        // gcd is cleared
        let v = surd(2, 4, 6, 3);
        assert_eq!(v.rational_part(), &BigInt::from(1));
        assert_eq!(v.surd_coeff(), &BigInt::from(2));
        assert_eq!(v.denom(), &BigInt::from(3));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            QuadraticSurd::new(1.into(), 1.into(), 0.into(), 2.into()),
            Err(Error::DivisionByZero)
        );
        assert!(matches!(
            QuadraticSurd::new(1.into(), 1.into(), 1.into(), (-2).into()),
            Err(Error::NonPositiveRadicand(_))
        ));
        // d ≤ 0 is fine when the irrational part is absent
        assert!(QuadraticSurd::new(1.into(), 0.into(), 2.into(), 0.into()).is_ok());
    }

    #[test]
    fn signs_and_ordering() {
        let sqrt2_minus_1 = surd(-1, 1, 1, 2); // ≈ 0.4142
        assert!(sqrt2_minus_1.is_positive());
        let three_sevenths = QuadraticSurd::from_rational(&BigRational::new(3.into(), 7.into()));
        assert_eq!(
            sqrt2_minus_1.cmp_rat(&BigRational::new(3.into(), 7.into())),
            Ordering::Less
        );
        assert_eq!(
            sqrt2_minus_1.cmp_rat(&BigRational::new(2.into(), 5.into())),
            Ordering::Greater
        );
        assert_eq!(
            sqrt2_minus_1.cmp_abs(&three_sevenths.neg()).unwrap(),
            Ordering::Less
        );
        // mixed radicands refuse to compare
        let sqrt3 = QuadraticSurd::sqrt_of(3).unwrap();
        assert!(sqrt2_minus_1.cmp_exact(&sqrt3).is_err());
        assert!(sqrt2_minus_1.partial_cmp(&sqrt3).is_none());
    }

    #[test]
    fn floors() {
        assert_eq!(QuadraticSurd::sqrt_of(2).unwrap().floor(), BigInt::from(1));
        assert_eq!(surd(-1, 1, 1, 2).floor(), BigInt::from(0));
        assert_eq!(surd(1, 1, 2, 5).floor(), BigInt::from(1)); // golden ratio
        assert_eq!(surd(0, -1, 1, 2).floor(), BigInt::from(-2)); // -√2
        assert_eq!(surd(0, -1, 1, 2).ceil(), BigInt::from(-1));
        assert_eq!(surd(7, 0, 2, 1).floor(), BigInt::from(3));
        assert_eq!(surd(-7, 0, 2, 1).floor(), BigInt::from(-4));
        let f = surd(0, -1, 1, 2).fract();
        assert!(
            f.is_positive() && f.cmp_rat(&BigRational::new(1.into(), 1.into())) == Ordering::Less
        );
    }

    #[test]
    fn field_arithmetic() {
        let phi = surd(1, 1, 2, 5);
        // φ² = φ + 1
        assert_eq!(
            phi.mul(&phi).unwrap(),
            phi.add_rat(&BigRational::new(1.into(), 1.into()))
        );
        // 1/φ = φ - 1
        assert_eq!(
            phi.recip().unwrap(),
            phi.add_rat(&BigRational::new((-1).into(), 1.into()))
        );
        let x = surd(-1, 1, 1, 2);
        // x(x + 2) = 1, i.e. x² + 2x - 1 = 0 for x = √2 - 1
        assert_eq!(
            x.mul(&x.add_rat(&BigRational::new(2.into(), 1.into())))
                .unwrap(),
            QuadraticSurd::from_int(1)
        );
        // mismatched radicands error out
        assert!(matches!(
            x.add(&QuadraticSurd::sqrt_of(3).unwrap()),
            Err(Error::MismatchedRadicand(_, _))
        ));
        // ... but rationals mix with anything
        assert!(x.add(&QuadraticSurd::from_int(7)).is_ok());
        assert_eq!(QuadraticSurd::zero().recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn decimal_rendering() {
        let x = surd(-1, 1, 1, 2);
        assert_eq!(x.to_decimal(10), "0.4142135623");
        assert_eq!(x.neg().to_decimal(4), "-0.4142");
        assert_eq!(QuadraticSurd::from_int(3).to_decimal(2), "3.00");
        assert_eq!(QuadraticSurd::from_int(0).to_decimal(2), "0.00");
        assert_eq!(surd(1, 0, 2, 1).to_decimal(0), "0");
    }

    #[test]
    fn display_forms() {
        assert_eq!(surd(-1, 1, 1, 2).to_string(), "(-1+sqrt(2))");
        assert_eq!(surd(1, 1, 2, 5).to_string(), "(1+sqrt(5))/2");
        assert_eq!(surd(0, 1, 1, 2).to_string(), "sqrt(2)");
        assert_eq!(surd(0, -2, 3, 7).to_string(), "(-2*sqrt(7))/3");
        assert_eq!(surd(3, 0, 2, 1).to_string(), "3/2");
        assert_eq!(surd(5, 0, 1, 1).to_string(), "5");
        assert_eq!(ExtendedReal::Infinity.to_string(), "inf");
    }
}
