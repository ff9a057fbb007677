//! Regular continued fraction expansion with exact state.
//!
//! Quadratic irrationals run on the classical (P + √D)/Q state machine,
//! which visits finitely many states and therefore detects the eventual
//! period exactly. Decimal literals run interval arithmetic on
//! [value - ulp, value + ulp]: a partial quotient is *certified* only while
//! both interval endpoints agree on it, so every emitted term is a true
//! statement about all numbers printing as the given literal.

use std::collections::HashMap;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::QuadraticSurd;

/// A stream of partial quotients a₀, a₁, a₂, … (a₀ ∈ ℤ, aᵢ ≥ 1 for i ≥ 1).
#[derive(Debug, Clone)]
pub struct RcfStream {
    terms: Vec<BigInt>,
    source: Source,
    /// (preperiod length, period length) once the surd state machine loops.
    period: Option<(usize, usize)>,
    /// Number of certified terms if the source ran out of precision.
    exhausted: Option<usize>,
}

#[derive(Debug, Clone)]
enum Source {
    Surd(SurdState),
    Decimal(DecimalState),
}

/// Complete quotient (p + √d)/q with the classical invariant q | d - p².
#[derive(Debug, Clone)]
struct SurdState {
    p: BigInt,
    q: BigInt,
    d: BigInt,
    sqrt_d: BigInt,
    seen: HashMap<(BigInt, BigInt), usize>,
}

#[derive(Debug, Clone)]
struct DecimalState {
    lo: BigRational,
    hi: BigRational,
    mid: BigRational,
    /// The previous remainder's lower endpoint hit its floor exactly, so the
    /// next interval is unbounded: nothing further can be certified.
    boundary_hit: bool,
}

impl SurdState {
    fn new(x: &QuadraticSurd) -> SurdState {
        // (a + b√d)/c = (±a + √(b²d))/(±c), signs chosen so the root enters
        // positively; then scale to restore q | d - p².
        let b = x.surd_coeff();
        let mut p = x.rational_part().clone();
        let mut q = x.denom().clone();
        if b.is_negative() {
            p = -p;
            q = -q;
        }
        let mut d = b * b * x.radicand();
        let rem = (&d - &p * &p) % &q;
        if !rem.is_zero() {
            let scale = q.abs();
            p *= &scale;
            d *= &scale * &scale;
            q *= &scale;
        }
        let sqrt_d = d.sqrt();
        debug_assert!((&d - &p * &p).is_multiple_of(&q));
        SurdState {
            p,
            q,
            d,
            sqrt_d,
            seen: HashMap::new(),
        }
    }

    /// Floor of (p + √d)/q; √d is irrational here, making both the floor and
    /// (for q < 0) the ceiling adjustment exact.
    fn floor(&self) -> BigInt {
        let num = &self.p + &self.sqrt_d;
        if self.q.is_positive() {
            num.div_floor(&self.q)
        } else {
            let neg_q = -self.q.clone();
            -(num.div_floor(&neg_q) + BigInt::one())
        }
    }

    /// Emit the next quotient and advance the state.
    fn step(&mut self, index: usize, period: &mut Option<(usize, usize)>) -> BigInt {
        if period.is_none() {
            if let Some(&start) = self.seen.get(&(self.p.clone(), self.q.clone())) {
                *period = Some((start, index - start));
            } else {
                self.seen.insert((self.p.clone(), self.q.clone()), index);
            }
        }
        let a = self.floor();
        let p_next = &a * &self.q - &self.p;
        let q_next = (&self.d - &p_next * &p_next) / &self.q;
        self.p = p_next;
        self.q = q_next;
        a
    }
}

impl RcfStream {
    /// Expand a quadratic irrational to (at least) `terms` partial quotients.
    pub fn from_surd(x: &QuadraticSurd, terms: usize) -> Result<RcfStream> {
        if x.is_rational() {
            return Err(Error::RationalInput);
        }
        let mut stream = RcfStream {
            terms: Vec::new(),
            source: Source::Surd(SurdState::new(x)),
            period: None,
            exhausted: None,
        };
        stream.extend_to(terms)?;
        Ok(stream)
    }

    /// Expand a decimal literal (e.g. "0.41421356") understood as its value
    /// ± one unit in the last place. Errors with `RationalInput` when every
    /// number in that interval shares a finite expansion prefix ending at the
    /// literal's own precision (e.g. "0.5").
    pub fn from_decimal_str(s: &str, terms: usize) -> Result<RcfStream> {
        let (value, ulp) = parse_decimal(s)?;
        let state = DecimalState {
            lo: &value - &ulp,
            hi: &value + &ulp,
            mid: value,
            boundary_hit: false,
        };
        let mut stream = RcfStream {
            terms: Vec::new(),
            source: Source::Decimal(state),
            period: None,
            exhausted: None,
        };
        match stream.extend_to(terms) {
            Ok(()) | Err(Error::PrecisionExhausted { .. }) => Ok(stream),
            Err(e) => Err(e),
        }
    }

    /// Ensure at least `n` terms are materialized. For decimal sources this
    /// fails with `PrecisionExhausted` once certification stalls; already
    /// certified terms stay available.
    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        while self.terms.len() < n {
            if let Some(certified) = self.exhausted {
                return Err(Error::PrecisionExhausted { certified });
            }
            let index = self.terms.len();
            // Once periodic, terms repeat; skip the state machine.
            if let Some((pre, len)) = self.period {
                if index >= pre + len {
                    let a = self.terms[pre + (index - pre) % len].clone();
                    self.terms.push(a);
                    continue;
                }
            }
            match &mut self.source {
                Source::Surd(state) => {
                    let a = state.step(index, &mut self.period);
                    self.terms.push(a);
                }
                Source::Decimal(state) => {
                    // An exactly-integer midpoint remainder always sits at a
                    // certification stall, and means the literal reads as a
                    // rational at its own precision.
                    if state.mid.is_integer() {
                        return Err(Error::RationalInput);
                    }
                    if state.boundary_hit {
                        self.exhausted = Some(index);
                        return Err(Error::PrecisionExhausted { certified: index });
                    }
                    let a_lo = state.lo.floor();
                    let a_hi = state.hi.floor();
                    if a_lo != a_hi {
                        self.exhausted = Some(index);
                        return Err(Error::PrecisionExhausted { certified: index });
                    }
                    let a = a_lo.to_integer();
                    let lo_rem = &state.lo - BigRational::from_integer(a.clone());
                    let hi_rem = &state.hi - BigRational::from_integer(a.clone());
                    let mid_rem = &state.mid - BigRational::from_integer(a.clone());
                    self.terms.push(a);
                    // Remainders live in [0, 1); reciprocals swap endpoints.
                    state.mid = mid_rem.recip();
                    if lo_rem.is_zero() {
                        state.boundary_hit = true;
                    } else {
                        state.lo = hi_rem.recip();
                        state.hi = lo_rem.recip();
                    }
                }
            }
        }
        Ok(())
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn term(&self, i: usize) -> &BigInt {
        &self.terms[i]
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// (preperiod, period) lengths, if the source is a surd whose state
    /// machine has already looped.
    pub fn period(&self) -> Option<(usize, usize)> {
        self.period
    }

    /// Some(certified term count) if a decimal source stalled.
    pub fn exhausted(&self) -> Option<usize> {
        self.exhausted
    }
}

/// Parse "[-]digits.digits" into (value, one unit in the last place).
fn parse_decimal(s: &str) -> Result<(BigRational, BigRational)> {
    let err = |position: usize, message: &str| Error::Parse {
        position,
        message: message.to_string(),
    };
    let (sign, body, offset) = match s.as_bytes().first() {
        Some(b'-') => (-1, &s[1..], 1),
        Some(b'+') => (1, &s[1..], 1),
        _ => (1, s, 0),
    };
    let dot = body
        .find('.')
        .ok_or_else(|| err(offset, "decimal literal needs a fractional part"))?;
    let (int_part, frac_part) = (&body[..dot], &body[dot + 1..]);
    if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(offset, "malformed integer part"));
    }
    if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(offset + dot + 1, "malformed fractional part"));
    }
    let digits: BigInt = format!("{int_part}{frac_part}")
        .parse()
        .expect("digit string");
    let scale = BigInt::from(10).pow(frac_part.len() as u32);
    let value = BigRational::new(BigInt::from(sign) * digits, scale.clone());
    let ulp = BigRational::new(BigInt::one(), scale);
    Ok((value, ulp))
}

/// Numerators and denominators of the principal convergents, with the
/// conventional p₋₁ = 1, q₋₁ = 0 seeds, grown term by term.
#[derive(Debug, Clone)]
pub struct Convergents {
    // index i stores p_{i-1}, so n = -1 is slot 0
    p: Vec<BigInt>,
    q: Vec<BigInt>,
}

impl Default for Convergents {
    fn default() -> Self {
        Convergents::new()
    }
}

impl Convergents {
    pub fn new() -> Convergents {
        Convergents {
            p: vec![BigInt::one()],
            q: vec![BigInt::zero()],
        }
    }

    pub fn from_terms(terms: &[BigInt]) -> Convergents {
        let mut c = Convergents::new();
        for a in terms {
            c.push_term(a);
        }
        c
    }

    /// Apply the recurrence pₙ = aₙpₙ₋₁ + pₙ₋₂ (with p₋₂/q₋₂ = 0/1 folded in
    /// for the first term).
    pub fn push_term(&mut self, a: &BigInt) {
        let n = self.p.len();
        let pm2 = if n >= 2 {
            self.p[n - 2].clone()
        } else {
            BigInt::zero()
        };
        let qm2 = if n >= 2 {
            self.q[n - 2].clone()
        } else {
            BigInt::one()
        };
        let pn = a * &self.p[n - 1] + pm2;
        let qn = a * &self.q[n - 1] + qm2;
        self.p.push(pn);
        self.q.push(qn);
    }

    /// Number of materialized convergents (indices 0..len).
    pub fn len(&self) -> usize {
        self.p.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// pₙ for n ≥ -1.
    pub fn p(&self, n: isize) -> &BigInt {
        &self.p[(n + 1) as usize]
    }

    /// qₙ for n ≥ -1.
    pub fn q(&self, n: isize) -> &BigInt {
        &self.q[(n + 1) as usize]
    }

    pub fn value(&self, n: isize) -> BigRational {
        BigRational::new(self.p(n).clone(), self.q(n).clone())
    }

    /// The mediant-chain fraction (k·pₙ₋₁ + pₙ₋₂)/(k·qₙ₋₁ + qₙ₋₂).
    pub fn intermediate(&self, n: isize, k: &BigInt) -> BigRational {
        BigRational::new(
            k * self.p(n - 1) + self.p(n - 2),
            k * self.q(n - 1) + self.q(n - 2),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt2_minus_1() -> QuadraticSurd {
        QuadraticSurd::new((-1).into(), 1.into(), 1.into(), 2.into()).unwrap()
    }

    fn terms_i64(s: &RcfStream) -> Vec<i64> {
        s.terms()
            .iter()
            .map(|a| i64::try_from(a).unwrap())
            .collect()
    }

    #[test]
    fn golden_expansions() {
        let s = RcfStream::from_surd(&sqrt2_minus_1(), 8).unwrap();
        assert_eq!(terms_i64(&s), vec![0, 2, 2, 2, 2, 2, 2, 2]);
        assert_eq!(s.period(), Some((1, 1)));

        let sqrt3 = QuadraticSurd::sqrt_of(3).unwrap();
        let s = RcfStream::from_surd(&sqrt3, 7).unwrap();
        assert_eq!(terms_i64(&s), vec![1, 1, 2, 1, 2, 1, 2]);
        assert_eq!(s.period(), Some((1, 2)));

        let phi = QuadraticSurd::new(1.into(), 1.into(), 2.into(), 5.into()).unwrap();
        let s = RcfStream::from_surd(&phi, 6).unwrap();
        assert_eq!(terms_i64(&s), vec![1, 1, 1, 1, 1, 1]);

        let neg = QuadraticSurd::new(0.into(), (-1).into(), 1.into(), 2.into()).unwrap();
        let s = RcfStream::from_surd(&neg, 6).unwrap();
        assert_eq!(terms_i64(&s), vec![-2, 1, 1, 2, 2, 2]);
    }

    #[test]
    fn rational_surd_is_rejected() {
        let half = QuadraticSurd::new(1.into(), 0.into(), 2.into(), 1.into()).unwrap();
        assert_eq!(
            RcfStream::from_surd(&half, 5).unwrap_err(),
            Error::RationalInput
        );
    }

    #[test]
    fn period_extension_is_cheap_and_consistent() {
        let x = QuadraticSurd::new(3.into(), 2.into(), 7.into(), 19.into()).unwrap();
        let mut s = RcfStream::from_surd(&x, 4).unwrap();
        s.extend_to(2000).unwrap();
        let (pre, len) = s
            .period()
            .expect("quadratic irrationals are eventually periodic");
        assert!(len >= 1);
        for i in pre..(s.len() - len) {
            assert_eq!(s.term(i), s.term(i + len), "period mismatch at {i}");
        }
        for (i, a) in s.terms().iter().enumerate().skip(1) {
            assert!(a >= &BigInt::one(), "a_{i} must be positive");
        }
    }

    #[test]
    fn decimal_certification() {
        // 40 digits of √2 - 1
        let lit = "0.4142135623730950488016887242096980785696";
        let s = RcfStream::from_decimal_str(lit, 500).unwrap();
        assert!(
            s.exhausted().is_some(),
            "finite precision must stall eventually"
        );
        let n = s.len();
        assert!(n >= 30, "40 digits certify plenty of 2s, got {n}");
        let expected = RcfStream::from_surd(&sqrt2_minus_1(), n).unwrap();
        assert_eq!(s.terms(), &expected.terms()[..n]);
        // asking beyond the stall reports the certified count
        let mut s2 = s.clone();
        assert!(matches!(
            s2.extend_to(n + 1),
            Err(Error::PrecisionExhausted { certified }) if certified == n
        ));
    }

    #[test]
    fn decimal_rational_rejection() {
        assert_eq!(
            RcfStream::from_decimal_str("0.5", 10).unwrap_err(),
            Error::RationalInput
        );
        assert_eq!(
            RcfStream::from_decimal_str("3.0", 10).unwrap_err(),
            Error::RationalInput
        );
        assert_eq!(
            RcfStream::from_decimal_str("-2.25", 10).unwrap_err(),
            Error::RationalInput
        );
        // a literal printing a terminating rational near 1/3 certifies a₀ = 0
        // and then stalls: the ± 1 ulp interval straddles 1/3, so not even
        // a₁ is decidable (and the midpoint never lands on an integer first).
        let third = RcfStream::from_decimal_str("0.3333333333", 10).unwrap();
        assert_eq!(third.terms(), &[BigInt::zero()]);
        assert_eq!(third.exhausted(), Some(1));
        assert!(matches!(
            RcfStream::from_decimal_str("abc", 10).unwrap_err(),
            Error::Parse { .. }
        ));
        assert!(matches!(
            RcfStream::from_decimal_str("12", 10).unwrap_err(),
            Error::Parse { .. }
        ));
    }

    #[test]
    fn negative_decimal_certifies() {
        let lit = "-1.4142135623730950488";
        let s = RcfStream::from_decimal_str(lit, 100).unwrap();
        assert_eq!(s.term(0), &BigInt::from(-2));
        let neg = QuadraticSurd::new(0.into(), (-1).into(), 1.into(), 2.into()).unwrap();
        let expected = RcfStream::from_surd(&neg, s.len()).unwrap();
        assert_eq!(s.terms(), &expected.terms()[..s.len()]);
    }

    #[test]
    fn convergents_recurrence_and_determinant() {
        let s = RcfStream::from_surd(&sqrt2_minus_1(), 12).unwrap();
        let c = Convergents::from_terms(s.terms());
        assert_eq!(c.value(0), BigRational::new(0.into(), 1.into()));
        assert_eq!(c.value(1), BigRational::new(1.into(), 2.into()));
        assert_eq!(c.value(2), BigRational::new(2.into(), 5.into()));
        assert_eq!(c.value(3), BigRational::new(5.into(), 12.into()));
        for n in 0..(c.len() as isize) {
            // pₙqₙ₋₁ - pₙ₋₁qₙ = (-1)ⁿ⁻¹ and denominators grow
            let det = c.p(n) * c.q(n - 1) - c.p(n - 1) * c.q(n);
            let expected = if n % 2 == 0 {
                BigInt::from(-1)
            } else {
                BigInt::one()
            };
            assert_eq!(det, expected, "determinant at n={n}");
            if n >= 2 {
                assert!(c.q(n) > c.q(n - 1));
            }
        }
        // intermediate at k = aₙ reproduces the principal convergent
        let a4 = BigInt::from(2);
        assert_eq!(c.intermediate(4, &a4), c.value(4));
    }
}
