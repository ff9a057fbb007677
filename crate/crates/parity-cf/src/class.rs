//! The three parity classes of lowest-terms rationals, which double as the
//! three boundary symbols {0, 1, inf} of the reflection-word machinery.
//!
//! A lowest-terms fraction p/q falls into exactly one class once numerator
//! and denominator are read mod 2: even/odd, odd/odd, or odd/even. Writing
//! the classes as 0, 1 and inf makes the class of p/q literally "p/q mod 2",
//! with 1/0 = inf covering the point at infinity.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Integer};

use crate::error::Error;

/// Parity class of a lowest-terms rational, a.k.a. a boundary symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParityClass {
    /// even/odd, e.g. 0 = 0/1
    Zero,
    /// odd/odd, e.g. 1 = 1/1
    One,
    /// odd/even, e.g. 1/0
    Inf,
}

/// Symbols of the reflection-word alphabet are the same three values.
pub type Symbol = ParityClass;

pub const ALL_CLASSES: [ParityClass; 3] = [ParityClass::Zero, ParityClass::One, ParityClass::Inf];

impl ParityClass {
    /// The unique class different from both arguments (which must differ).
    pub fn third(a: ParityClass, b: ParityClass) -> ParityClass {
        assert_ne!(a, b, "third() needs two distinct classes");
        *ALL_CLASSES
            .iter()
            .find(|c| **c != a && **c != b)
            .expect("two distinct classes leave one")
    }

    /// Index 0, 1, 2 in the fixed order [Zero, One, Inf].
    pub fn index(self) -> usize {
        match self {
            ParityClass::Zero => 0,
            ParityClass::One => 1,
            ParityClass::Inf => 2,
        }
    }

    pub fn from_index(i: usize) -> ParityClass {
        ALL_CLASSES[i]
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParityClass::Zero => write!(f, "0"),
            ParityClass::One => write!(f, "1"),
            ParityClass::Inf => write!(f, "inf"),
        }
    }
}

impl FromStr for ParityClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "0" => Ok(ParityClass::Zero),
            "1" => Ok(ParityClass::One),
            "inf" | "oo" | "infinity" => Ok(ParityClass::Inf),
            _ => Err(Error::Parse {
                position: 0,
                message: format!("expected one of 0, 1, inf; got {s:?}"),
            }),
        }
    }
}

/// Parity class of p/q. The fraction must be in lowest terms; q = 0 encodes
/// the point at infinity (p odd by coprimality). Negative p is classified by
/// |p|.
pub fn parity_of(p: &BigInt, q: &BigInt) -> ParityClass {
    match (p.is_even(), q.is_even()) {
        (true, false) => ParityClass::Zero,
        (false, false) => ParityClass::One,
        (false, true) => ParityClass::Inf,
        (true, true) => unreachable!("fraction not in lowest terms"),
    }
}

/// Parity class of a rational (BigRational keeps itself in lowest terms).
pub fn parity_of_rational(r: &BigRational) -> ParityClass {
    parity_of(r.numer(), r.denom())
}

/// An unordered pair of distinct parity classes, used to select the union
/// of two classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassPair {
    lo: ParityClass,
    hi: ParityClass,
}

impl ClassPair {
    pub fn new(a: ParityClass, b: ParityClass) -> ClassPair {
        assert_ne!(a, b, "a class pair needs two distinct classes");
        if a.index() <= b.index() {
            ClassPair { lo: a, hi: b }
        } else {
            ClassPair { lo: b, hi: a }
        }
    }

    pub fn contains(self, c: ParityClass) -> bool {
        self.lo == c || self.hi == c
    }

    /// The class missing from the pair.
    pub fn complement(self) -> ParityClass {
        ParityClass::third(self.lo, self.hi)
    }

    pub fn members(self) -> (ParityClass, ParityClass) {
        (self.lo, self.hi)
    }

    pub fn all() -> [ClassPair; 3] {
        [
            ClassPair::new(ParityClass::Zero, ParityClass::One),
            ClassPair::new(ParityClass::Zero, ParityClass::Inf),
            ClassPair::new(ParityClass::One, ParityClass::Inf),
        ]
    }
}

impl fmt::Display for ClassPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.lo, self.hi)
    }
}

/// Either a single class or a pair union; what the CLI `--class` flag selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassFilter {
    Single(ParityClass),
    Pair(ClassPair),
}

impl ClassFilter {
    pub fn contains(self, c: ParityClass) -> bool {
        match self {
            ClassFilter::Single(a) => a == c,
            ClassFilter::Pair(p) => p.contains(c),
        }
    }
}

impl FromStr for ClassFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.split_once(',') {
            None => Ok(ClassFilter::Single(s.trim().parse()?)),
            Some((a, b)) => {
                let a: ParityClass = a.trim().parse()?;
                let b: ParityClass = b.trim().parse()?;
                if a == b {
                    return Err(Error::Parse {
                        position: 0,
                        message: format!("class pair must name two distinct classes, got {s:?}"),
                    });
                }
                Ok(ClassFilter::Pair(ClassPair::new(a, b)))
            }
        }
    }
}

impl fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassFilter::Single(c) => write!(f, "{c}"),
            ClassFilter::Pair(p) => write!(f, "{p}"),
        }
    }
}
