//! Approximation sets read off the continued-fraction expansion.
//!
//! The one-sided best approximations of an irrational x are its convergents
//! p_n/q_n together with the intermediate fractions
//! (k·p_{n-1} + p_{n-2})/(k·q_{n-1} + q_{n-2}) for 1 ≤ k < a_n, plus ⌊x⌋
//! itself; the two-sided best approximations are the convergents alone,
//! except that p_0 drops out when a_1 = 1. Consecutive convergents always
//! lie in different parity classes (their determinant is odd), so each block
//! n has three distinct classes in play: α = class(p_{n-1}),
//! β = class(p_{n-2}) and the remaining class γ. Every parity-restricted
//! membership question then has a closed answer:
//!
//! - an intermediate with odd k lies in class γ, with even k in class β,
//!   and is always class-best within its own class;
//! - a one-sided-only member is beaten by a smaller fraction of class α
//!   (for the dropped p_0, of class(⌊x⌋ + 1)), so it belongs to exactly the
//!   two-class set whose missing class is that witness class;
//! - a two-sided best member belongs to the two-class sets containing its
//!   own class.

use num::{BigInt, BigRational, Integer, One, Zero};

use crate::class::{parity_of, ClassPair, ParityClass, ALL_CLASSES};
use crate::error::Result;
use crate::rcf::RcfStream;
use crate::sets::{ApproxSets, Limit};

/// How a one-sided best approximation arises from the expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ApproxKind {
    /// The n-th convergent p_n/q_n.
    Principal { n: usize },
    /// (k·p_{n-1} + p_{n-2})/(k·q_{n-1} + q_{n-2}) with 1 ≤ k < a_n.
    Intermediate { n: usize, k: BigInt },
}

impl ApproxKind {
    /// The expansion block the member comes from.
    pub fn block(&self) -> usize {
        match self {
            ApproxKind::Principal { n } => *n,
            ApproxKind::Intermediate { n, .. } => *n,
        }
    }
}

/// One member of the one-sided best approximation set, carrying everything
/// needed to answer parity-restricted membership questions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxRecord {
    pub value: BigRational,
    pub kind: ApproxKind,
    /// Parity class of the fraction itself.
    pub parity: ParityClass,
    /// Whether the fraction is also a two-sided best approximation.
    pub in_best: bool,
    /// For one-sided-only members, the class of the smaller-denominator
    /// fraction with strictly smaller error that keeps them out of the
    /// two-sided set.
    pub witness: Option<ParityClass>,
}

impl ApproxRecord {
    /// Membership in the single-class set for `c`.
    pub fn in_single(&self, c: ParityClass) -> bool {
        self.parity == c
    }

    /// Membership in the two-class set for `pair`.
    pub fn in_pair(&self, pair: ClassPair) -> bool {
        match self.witness {
            None => pair.contains(self.parity),
            Some(w) => pair.complement() == w,
        }
    }
}

/// Which approximation set to read off the record stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetSelector {
    /// Two-sided best approximations.
    Best,
    /// One-sided best approximations.
    Signed,
    /// Best approximations among one class.
    BestSingle(ParityClass),
    /// Best approximations among the union of two classes.
    BestPair(ClassPair),
    /// One-sided-only members with the given witness class.
    SignedOnly(ParityClass),
}

impl SetSelector {
    pub fn admits(&self, r: &ApproxRecord) -> bool {
        match *self {
            SetSelector::Best => r.in_best,
            SetSelector::Signed => true,
            SetSelector::BestSingle(c) => r.in_single(c),
            SetSelector::BestPair(p) => r.in_pair(p),
            SetSelector::SignedOnly(c) => r.witness == Some(c),
        }
    }

    /// After rejecting the intermediate `r`, could any later intermediate of
    /// the same block still be admitted? Witness class and pair membership
    /// are constant across a block; only the fraction's own class alternates
    /// with the parity of k.
    fn may_admit_rest_of_block(&self, r: &ApproxRecord) -> bool {
        match *self {
            SetSelector::Signed => true,
            SetSelector::Best => false,
            SetSelector::BestSingle(c) => Some(c) != r.witness,
            SetSelector::BestPair(_) | SetSelector::SignedOnly(_) => false,
        }
    }
}

/// Walks the members of the one-sided set in order of increasing
/// denominator: ⌊x⌋ first, then block by block, within a block k = 1 up to
/// the convergent at k = a_n.
struct Enumerator<'a> {
    stream: &'a mut RcfStream,
    /// Convergents p_{n-1} and p_{n-2} below the current block.
    prev: (BigInt, BigInt),
    prev2: (BigInt, BigInt),
    n: usize,
    a_n: BigInt,
    k: BigInt,
    alpha: ParityClass,
    beta: ParityClass,
    gamma: ParityClass,
    started: bool,
}

impl<'a> Enumerator<'a> {
    fn new(stream: &'a mut RcfStream) -> Result<Enumerator<'a>> {
        stream.extend_to(2)?;
        let a0 = stream.term(0).clone();
        Ok(Enumerator {
            prev: (a0, BigInt::one()),
            prev2: (BigInt::one(), BigInt::zero()),
            n: 0,
            a_n: BigInt::zero(),
            k: BigInt::one(),
            alpha: ParityClass::Zero,
            beta: ParityClass::Zero,
            gamma: ParityClass::Zero,
            started: false,
            stream,
        })
    }

    fn period(&self) -> Option<(usize, usize)> {
        self.stream.period()
    }

    fn advance_block(&mut self) -> Result<()> {
        if self.n > 0 {
            let p = &self.a_n * &self.prev.0 + &self.prev2.0;
            let q = &self.a_n * &self.prev.1 + &self.prev2.1;
            self.prev2 = std::mem::replace(&mut self.prev, (p, q));
        }
        self.n += 1;
        self.stream.extend_to(self.n + 1)?;
        self.a_n = self.stream.term(self.n).clone();
        self.alpha = parity_of(&self.prev.0, &self.prev.1);
        self.beta = parity_of(&self.prev2.0, &self.prev2.1);
        debug_assert_ne!(self.alpha, self.beta);
        self.gamma = ParityClass::third(self.alpha, self.beta);
        self.k = BigInt::one();
        Ok(())
    }

    fn next(&mut self) -> Result<ApproxRecord> {
        if !self.started {
            self.started = true;
            let parity = parity_of(&self.prev.0, &self.prev.1);
            // With a_1 = 1 the next convergent is ⌊x⌋ + 1 at the same
            // denominator and closer, so ⌊x⌋ is one-sided-only.
            let (in_best, witness) = if self.stream.term(1).is_one() {
                let above = &self.prev.0 + 1;
                (false, Some(parity_of(&above, &BigInt::one())))
            } else {
                (true, None)
            };
            return Ok(ApproxRecord {
                value: BigRational::new(self.prev.0.clone(), BigInt::one()),
                kind: ApproxKind::Principal { n: 0 },
                parity,
                in_best,
                witness,
            });
        }
        if self.n == 0 || self.k > self.a_n {
            self.advance_block()?;
        }
        let p = &self.k * &self.prev.0 + &self.prev2.0;
        let q = &self.k * &self.prev.1 + &self.prev2.1;
        let record = if self.k < self.a_n {
            let parity = if self.k.is_odd() {
                self.gamma
            } else {
                self.beta
            };
            debug_assert_eq!(parity, parity_of(&p, &q));
            ApproxRecord {
                value: BigRational::new(p, q),
                kind: ApproxKind::Intermediate {
                    n: self.n,
                    k: self.k.clone(),
                },
                parity,
                in_best: false,
                witness: Some(self.alpha),
            }
        } else {
            let parity = parity_of(&p, &q);
            debug_assert_eq!(
                parity,
                if self.a_n.is_odd() {
                    self.gamma
                } else {
                    self.beta
                }
            );
            ApproxRecord {
                value: BigRational::new(p, q),
                kind: ApproxKind::Principal { n: self.n },
                parity,
                in_best: true,
                witness: None,
            }
        };
        self.k += 1u32;
        Ok(record)
    }

    /// Jump past the remaining intermediates of the current block.
    fn skip_to_principal(&mut self) {
        if self.n > 0 && self.k < self.a_n {
            self.k = self.a_n.clone();
        }
    }
}

/// How many consecutive record-free blocks certify that a set has no
/// further members. Witness classes and block parities depend only on the
/// parity state of two consecutive convergents (six possibilities) and the
/// position inside the expansion's period, so past the preperiod everything
/// repeats with period dividing 6·len; a full silent cycle is conclusive.
fn silence_limit(period: Option<(usize, usize)>) -> Option<usize> {
    period.map(|(start, len)| start + 6 * len + 64)
}

/// The records admitted by `selector` (all records if `None`), in order of
/// increasing denominator.
///
/// With a count limit the walk stops early once the expansion's periodicity
/// certifies that no further member exists, so the result may be shorter
/// than requested; that means the set is complete. Decimal-backed streams
/// fail with a precision error instead when their certified terms run out.
pub fn collect_records(
    stream: &mut RcfStream,
    limit: &Limit,
    selector: Option<SetSelector>,
) -> Result<Vec<ApproxRecord>> {
    let mut out = Vec::new();
    let mut e = Enumerator::new(stream)?;
    match limit {
        Limit::DenomAtMost(qmax) => loop {
            let r = e.next()?;
            if r.value.denom() > qmax {
                break;
            }
            if selector.map_or(true, |s| s.admits(&r)) {
                out.push(r);
            }
        },
        Limit::Count(n) => {
            let mut silent = 0usize;
            let mut current_block = 0usize;
            let mut progressed = false;
            while out.len() < *n {
                if let Some(lim) = silence_limit(e.period()) {
                    if silent > lim {
                        break;
                    }
                }
                let r = e.next()?;
                let b = r.kind.block();
                if b != current_block {
                    if progressed {
                        silent = 0;
                    } else {
                        silent += 1;
                    }
                    current_block = b;
                    progressed = false;
                }
                match selector {
                    Some(s) if !s.admits(&r) => {
                        if matches!(r.kind, ApproxKind::Intermediate { .. })
                            && !s.may_admit_rest_of_block(&r)
                        {
                            e.skip_to_principal();
                        }
                    }
                    _ => {
                        out.push(r);
                        progressed = true;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Push a record's value into every set it belongs to, capping each set at
/// `cap` entries; reports whether anything was pushed.
fn push_record(sets: &mut ApproxSets, r: &ApproxRecord, cap: usize) -> bool {
    let mut any = false;
    let mut push = |v: &mut Vec<BigRational>, yes: bool| {
        if yes && v.len() < cap {
            v.push(r.value.clone());
            any = true;
        }
    };
    push(&mut sets.best, r.in_best);
    push(&mut sets.signed, true);
    push(&mut sets.best_single[r.parity.index()], true);
    if let Some(w) = r.witness {
        push(&mut sets.signed_only[w.index()], true);
    }
    for missing in ALL_CLASSES {
        let in_pair = match r.witness {
            None => missing != r.parity,
            Some(w) => missing == w,
        };
        push(&mut sets.best_pair[missing.index()], in_pair);
    }
    any
}

fn all_full(sets: &ApproxSets, cap: usize) -> bool {
    sets.best.len() >= cap
        && sets.signed.len() >= cap
        && sets
            .signed_only
            .iter()
            .chain(sets.best_single.iter())
            .chain(sets.best_pair.iter())
            .all(|v| v.len() >= cap)
}

/// Could a later intermediate of the same block still land in an unfilled
/// set, given that the rejected record `r` landed nowhere?
fn bundle_wants_rest(sets: &ApproxSets, r: &ApproxRecord, cap: usize) -> bool {
    if sets.signed.len() < cap {
        return true;
    }
    let w = r.witness.expect("intermediates carry a witness");
    for c in ALL_CLASSES {
        if c != w && sets.best_single[c.index()].len() < cap {
            return true;
        }
    }
    sets.signed_only[w.index()].len() < cap || sets.best_pair[w.index()].len() < cap
}

/// The full bundle of approximation sets along this route.
///
/// A denominator limit yields every member up to the bound; a count limit
/// yields the first n members of each set, stopping a set short only when
/// periodicity certifies it has no more members at all.
pub fn route_sets(stream: &mut RcfStream, limit: &Limit) -> Result<ApproxSets> {
    let mut sets = ApproxSets::default();
    let mut e = Enumerator::new(stream)?;
    match limit {
        Limit::DenomAtMost(qmax) => loop {
            let r = e.next()?;
            if r.value.denom() > qmax {
                break;
            }
            push_record(&mut sets, &r, usize::MAX);
        },
        Limit::Count(n) => {
            let cap = *n;
            let mut silent = 0usize;
            let mut current_block = 0usize;
            let mut progressed = false;
            while !all_full(&sets, cap) {
                if let Some(lim) = silence_limit(e.period()) {
                    if silent > lim {
                        break;
                    }
                }
                let r = e.next()?;
                let b = r.kind.block();
                if b != current_block {
                    if progressed {
                        silent = 0;
                    } else {
                        silent += 1;
                    }
                    current_block = b;
                    progressed = false;
                }
                if push_record(&mut sets, &r, cap) {
                    progressed = true;
                } else if matches!(r.kind, ApproxKind::Intermediate { .. })
                    && !bundle_wants_rest(&sets, &r, cap)
                {
                    e.skip_to_principal();
                }
            }
        }
    }
    sets.sort();
    Ok(sets)
}
