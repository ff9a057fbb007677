//! Interval maps that shift the symbol stream.
//!
//! Six classical continued-fraction maps on the open unit interval — the
//! Farey map, the Gauss map, the by-excess map, and the even, odd and
//! odd-odd expansion maps — all act the same way on the symbol stream: a
//! step consumes a kind-specific prefix α₁…α_m and relabels the remaining
//! symbols by a fixed permutation, so the output's stream is σ(α_{m+1}),
//! σ(α_{m+2}), …. The step itself is the Möbius map σ·H_{α_m}⋯H_{α₁}
//! applied to the input.
//!
//! Running a map backwards enumerates approximation sets: pulling the point
//! 0 back through the inverted branches of the even map lists the best
//! approximations in the even/odd–odd/even parity pair, and pulling 1 back
//! through the odd-odd map lists the one-sided-best members of the odd/odd
//! class, both in increasing order.

use std::fmt;
use std::str::FromStr;

use num::{BigRational, One};

use crate::class::ParityClass;
use crate::delta::DeltaStream;
use crate::error::{Error, Result};
use crate::exact::{ExtRational, ExtendedReal, Mat2, PermS3, QuadraticSurd};

/// Which interval map to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CfMapKind {
    Farey,
    Gauss,
    ByExcess,
    Even,
    Odd,
    OddOdd,
}

pub const ALL_MAP_KINDS: [CfMapKind; 6] = [
    CfMapKind::Farey,
    CfMapKind::Gauss,
    CfMapKind::ByExcess,
    CfMapKind::Even,
    CfMapKind::Odd,
    CfMapKind::OddOdd,
];

impl fmt::Display for CfMapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CfMapKind::Farey => "farey",
            CfMapKind::Gauss => "gauss",
            CfMapKind::ByExcess => "by-excess",
            CfMapKind::Even => "even",
            CfMapKind::Odd => "odd",
            CfMapKind::OddOdd => "odd-odd",
        };
        write!(f, "{name}")
    }
}

impl FromStr for CfMapKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<CfMapKind> {
        match s.trim().to_ascii_lowercase().as_str() {
            "farey" => Ok(CfMapKind::Farey),
            "gauss" => Ok(CfMapKind::Gauss),
            "by-excess" | "byexcess" => Ok(CfMapKind::ByExcess),
            "even" => Ok(CfMapKind::Even),
            "odd" => Ok(CfMapKind::Odd),
            "odd-odd" | "oddodd" => Ok(CfMapKind::OddOdd),
            other => Err(Error::Parse {
                position: 0,
                message: format!(
                    "unknown map \"{other}\" (expected farey, gauss, by-excess, even, odd or odd-odd)"
                ),
            }),
        }
    }
}

/// One application of an interval map, with the branch it acted by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapStep {
    pub input: QuadraticSurd,
    pub output: QuadraticSurd,
    /// Integer Möbius matrix of the branch: output = branch · input.
    pub branch: Mat2,
    /// How many leading symbols of the input's stream the step consumed.
    pub symbols_consumed: usize,
    /// How the step relabels the remaining symbols.
    pub relabel: PermS3,
}

/// The three-cycle sending 0 to inf, inf to 1 and 1 to 0.
fn sigma_cycle() -> PermS3 {
    PermS3::swap(ParityClass::Zero, ParityClass::One)
        .compose(&PermS3::swap(ParityClass::Zero, ParityClass::Inf))
}

/// Prefix length and relabel permutation of one step of `kind` on the given
/// stream. The Farey map always consumes one symbol; the Gauss-family maps
/// consume the whole leading block (up to just before the first 0 symbol);
/// the odd-odd map consumes up to and including the first 1 symbol.
fn step_shape(kind: CfMapKind, stream: &mut DeltaStream) -> Result<(usize, PermS3)> {
    use ParityClass::{Inf, One, Zero};
    match kind {
        CfMapKind::Farey => {
            let sigma = match stream.symbol(2)? {
                One => PermS3::swap(One, Inf),
                Zero => sigma_cycle(),
                Inf => unreachable!("adjacent symbols differ"),
            };
            Ok((1, sigma))
        }
        CfMapKind::Gauss | CfMapKind::ByExcess | CfMapKind::Even | CfMapKind::Odd => {
            let mut m = 1;
            while stream.symbol(m + 1)? != Zero {
                m += 1;
            }
            let swap_ends = PermS3::swap(Zero, Inf);
            let sigma = match kind {
                CfMapKind::Gauss => {
                    if m % 2 == 0 {
                        swap_ends
                    } else {
                        sigma_cycle()
                    }
                }
                CfMapKind::ByExcess => {
                    if m % 2 == 0 {
                        sigma_cycle()
                    } else {
                        swap_ends
                    }
                }
                CfMapKind::Even => swap_ends,
                CfMapKind::Odd => sigma_cycle(),
                _ => unreachable!(),
            };
            Ok((m, sigma))
        }
        CfMapKind::OddOdd => {
            let mut m = 1;
            while stream.symbol(m)? != One {
                m += 1;
            }
            let sigma = match stream.symbol(m + 1)? {
                Inf => PermS3::identity(),
                Zero => PermS3::swap(Zero, Inf),
                One => unreachable!("adjacent symbols differ"),
            };
            Ok((m, sigma))
        }
    }
}

/// Apply one step of the chosen map to an irrational in (0, 1).
pub fn map_step(kind: CfMapKind, x: &QuadraticSurd) -> Result<MapStep> {
    if x.is_rational() {
        return Err(Error::RationalInput);
    }
    if x.signum() < 0 || x.cmp_rat(&BigRational::one()).is_gt() {
        return Err(Error::OutsideUnitInterval);
    }
    let mut stream = DeltaStream::from_surd(x, 4)?;
    let (m, relabel) = step_shape(kind, &mut stream)?;
    let mut branch = relabel.to_matrix();
    for i in (0..m).rev() {
        branch = branch.mul(&Mat2::reflection(stream.symbols()[i]));
    }
    let output = match branch.apply(&ExtendedReal::Finite(x.clone())) {
        ExtendedReal::Finite(y) => y,
        ExtendedReal::Infinity => unreachable!("interval maps keep irrationals finite"),
    };
    debug_assert!(
        output.signum() > 0 && output.cmp_rat(&BigRational::one()).is_lt(),
        "interval maps stay inside the unit interval"
    );
    Ok(MapStep {
        input: x.clone(),
        output,
        branch,
        symbols_consumed: m,
        relabel,
    })
}

/// Iterate the map `steps` times, recording every step.
pub fn orbit(kind: CfMapKind, x: &QuadraticSurd, steps: usize) -> Result<Vec<MapStep>> {
    let mut out = Vec::with_capacity(steps);
    let mut cur = x.clone();
    for _ in 0..steps {
        let step = map_step(kind, &cur)?;
        cur = step.output.clone();
        out.push(step);
    }
    Ok(out)
}

fn inverse_orbit(
    kind: CfMapKind,
    anchor: ParityClass,
    x: &QuadraticSurd,
    i_max: usize,
) -> Result<Vec<BigRational>> {
    let point = anchor.as_point();
    let mut w = Mat2::identity();
    let mut cur = x.clone();
    let mut out = Vec::with_capacity(i_max);
    for i in 0..i_max {
        if i > 0 {
            let step = map_step(kind, &cur)?;
            w = w.mul(&step.branch.adjugate());
            cur = step.output;
        }
        match w.apply_rational(&point) {
            ExtRational::Finite(v) => out.push(v),
            ExtRational::Infinity => unreachable!("pulled-back anchors stay finite"),
        }
    }
    Ok(out)
}

/// The first `i_max` best approximations of x in the parity pair missing
/// the odd/odd class, in increasing order: the anchor 0 pulled back through
/// the inverted branches of the even map along its forward orbit.
pub fn even_inverse_orbit(x: &QuadraticSurd, i_max: usize) -> Result<Vec<BigRational>> {
    inverse_orbit(CfMapKind::Even, ParityClass::Zero, x, i_max)
}

/// The first `i_max` one-sided-best approximations of x in the odd/odd
/// class, in increasing order: the anchor 1 pulled back through the
/// inverted branches of the odd-odd map.
pub fn oddodd_inverse_orbit(x: &QuadraticSurd, i_max: usize) -> Result<Vec<BigRational>> {
    inverse_orbit(CfMapKind::OddOdd, ParityClass::One, x, i_max)
}
