//! The symmetric group on the three boundary symbols {0, 1, inf}.
//!
//! Six Möbius transformations permute the symbol points {0, 1, ∞}; they form
//! the stabilizer of the ideal triangle and act on parity classes exactly as
//! they act on the points. `PermS3` is that abstract permutation, convertible
//! both ways: read off a matrix, or realized as its canonical matrix.

use std::fmt;

use crate::class::{ParityClass, Symbol, ALL_CLASSES};
use crate::error::{Error, Result};
use crate::exact::mat2::Mat2;

/// A permutation of {0, 1, inf}; `img[i]` is the image of the symbol with
/// index i in the fixed order [0, 1, inf].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PermS3 {
    img: [Symbol; 3],
}

impl PermS3 {
    pub fn identity() -> PermS3 {
        PermS3 { img: ALL_CLASSES }
    }

    /// The transposition swapping `a` and `b`.
    pub fn swap(a: Symbol, b: Symbol) -> PermS3 {
        let mut img = ALL_CLASSES;
        img[a.index()] = b;
        img[b.index()] = a;
        PermS3 { img }
    }

    pub fn apply(&self, s: Symbol) -> Symbol {
        self.img[s.index()]
    }

    /// self ∘ other: apply `other` first, then `self`.
    pub fn compose(&self, other: &PermS3) -> PermS3 {
        let mut img = ALL_CLASSES;
        for s in ALL_CLASSES {
            img[s.index()] = self.apply(other.apply(s));
        }
        PermS3 { img }
    }

    pub fn inverse(&self) -> PermS3 {
        let mut img = ALL_CLASSES;
        for s in ALL_CLASSES {
            img[self.apply(s).index()] = s;
        }
        PermS3 { img }
    }

    pub fn is_identity(&self) -> bool {
        self.img == ALL_CLASSES
    }

    /// Read the permutation off a matrix by letting it act on the three
    /// symbol points. Errors unless the matrix permutes {0, 1, ∞}, which
    /// characterizes the six-element symmetry group projectively.
    pub fn from_matrix(m: &Mat2) -> Result<PermS3> {
        let mut img = ALL_CLASSES;
        let mut seen = [false; 3];
        for s in ALL_CLASSES {
            let image = m.apply_rational(&s.as_point());
            let t = ALL_CLASSES
                .into_iter()
                .find(|t| t.as_point() == image)
                .ok_or(Error::NotInSymmetryGroup)?;
            img[s.index()] = t;
            seen[t.index()] = true;
        }
        if seen.iter().all(|&b| b) {
            Ok(PermS3 { img })
        } else {
            Err(Error::NotInSymmetryGroup)
        }
    }

    /// The canonical matrix realizing this permutation (products of J: z↦1/z
    /// and K: z↦1-z).
    pub fn to_matrix(&self) -> Mat2 {
        let j = Mat2::j();
        let k = Mat2::k();
        let candidates = [
            Mat2::identity(),
            j.clone(),
            k.clone(),
            j.mul(&k),
            k.mul(&j),
            j.mul(&k).mul(&j),
        ];
        candidates
            .into_iter()
            .find(|m| PermS3::from_matrix(m).expect("symmetry group element") == *self)
            .expect("all six permutations are realized")
    }

    /// All six elements, identity first.
    pub fn all() -> [PermS3; 6] {
        let rot = PermS3 {
            // 0 ↦ 1 ↦ inf ↦ 0
            img: [ParityClass::One, ParityClass::Inf, ParityClass::Zero],
        };
        [
            PermS3::identity(),
            PermS3::swap(ParityClass::Zero, ParityClass::One),
            PermS3::swap(ParityClass::Zero, ParityClass::Inf),
            PermS3::swap(ParityClass::One, ParityClass::Inf),
            rot,
            rot.compose(&rot),
        ]
    }
}

impl fmt::Display for PermS3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Cycle notation over the symbols.
        let [i0, i1, i2] = self.img;
        match (i0, i1, i2) {
            (ParityClass::Zero, ParityClass::One, ParityClass::Inf) => write!(f, "e"),
            (ParityClass::One, ParityClass::Zero, ParityClass::Inf) => write!(f, "(0 1)"),
            (ParityClass::Inf, ParityClass::One, ParityClass::Zero) => write!(f, "(0 inf)"),
            (ParityClass::Zero, ParityClass::Inf, ParityClass::One) => write!(f, "(1 inf)"),
            (ParityClass::One, ParityClass::Inf, ParityClass::Zero) => write!(f, "(0 1 inf)"),
            (ParityClass::Inf, ParityClass::Zero, ParityClass::One) => write!(f, "(0 inf 1)"),
            _ => unreachable!("img is always a permutation"),
        }
    }
}
