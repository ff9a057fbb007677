//! The bundle of approximation sets every route computes, in one comparable
//! shape.
//!
//! All vectors are ordered by (denominator, numerator). Singles are indexed
//! by the class itself; pair sets by the *missing* class, so
//! `best_pair[γ.index()]` is the set for the union of the two classes other
//! than γ.

use num::BigRational;

use crate::class::{ClassPair, ParityClass, ALL_CLASSES};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ApproxSets {
    /// Best approximations (unsigned).
    pub best: Vec<BigRational>,
    /// Best one-sided (signed) approximations; a superset of `best`.
    pub signed: Vec<BigRational>,
    /// Signed-but-not-best members, split by the class of their defeating
    /// witness; indexed by witness class.
    pub signed_only: [Vec<BigRational>; 3],
    /// Class-restricted best approximations, indexed by the class.
    pub best_single: [Vec<BigRational>; 3],
    /// Pair-restricted best approximations, indexed by the missing class.
    pub best_pair: [Vec<BigRational>; 3],
}

fn fraction_key(r: &BigRational) -> (num::BigInt, num::BigInt) {
    (r.denom().clone(), r.numer().clone())
}

impl ApproxSets {
    /// Sort every component by (denominator, numerator).
    pub fn sort(&mut self) {
        let key = |r: &BigRational| fraction_key(r);
        self.best.sort_by_key(key);
        self.signed.sort_by_key(key);
        for v in self
            .signed_only
            .iter_mut()
            .chain(self.best_single.iter_mut())
            .chain(self.best_pair.iter_mut())
        {
            v.sort_by_key(key);
        }
    }

    pub fn pair_set(&self, pair: ClassPair) -> &Vec<BigRational> {
        &self.best_pair[pair.complement().index()]
    }

    pub fn single_set(&self, c: ParityClass) -> &Vec<BigRational> {
        &self.best_single[c.index()]
    }

    /// Truncate every component to entries with denominator ≤ `qmax`.
    pub fn truncate_to_denominator(&mut self, qmax: &num::BigInt) {
        let keep = |v: &mut Vec<BigRational>| v.retain(|r| r.denom() <= qmax);
        keep(&mut self.best);
        keep(&mut self.signed);
        for v in self
            .signed_only
            .iter_mut()
            .chain(self.best_single.iter_mut())
            .chain(self.best_pair.iter_mut())
        {
            keep(v);
        }
    }

    /// Truncate every component to its first `n` entries.
    pub fn truncate_to_count(&mut self, n: usize) {
        let keep = |v: &mut Vec<BigRational>| v.truncate(n);
        keep(&mut self.best);
        keep(&mut self.signed);
        for v in self
            .signed_only
            .iter_mut()
            .chain(self.best_single.iter_mut())
            .chain(self.best_pair.iter_mut())
        {
            keep(v);
        }
    }

    /// Human-readable description of the first differing component, if any.
    /// Used to report cross-route disagreements.
    pub fn diff(&self, other: &ApproxSets) -> Option<String> {
        fn show(v: &[BigRational]) -> String {
            let items: Vec<String> = v.iter().map(|r| r.to_string()).collect();
            format!("[{}]", items.join(", "))
        }
        let mut parts: Vec<(String, &Vec<BigRational>, &Vec<BigRational>)> = vec![
            ("best".into(), &self.best, &other.best),
            ("signed".into(), &self.signed, &other.signed),
        ];
        for c in ALL_CLASSES {
            parts.push((
                format!("signed_only[{c}]"),
                &self.signed_only[c.index()],
                &other.signed_only[c.index()],
            ));
            parts.push((
                format!("best_single[{c}]"),
                &self.best_single[c.index()],
                &other.best_single[c.index()],
            ));
            parts.push((
                format!("best_pair[missing {c}]"),
                &self.best_pair[c.index()],
                &other.best_pair[c.index()],
            ));
        }
        for (name, a, b) in parts {
            if a != b {
                return Some(format!("{name}: {} vs {}", show(a), show(b)));
            }
        }
        None
    }
}

/// How far an enumeration should run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Limit {
    /// All members with denominator ≤ the bound.
    DenomAtMost(num::BigInt),
    /// The first n members (of each requested set).
    Count(usize),
}
