//! Seeded, deterministic sampling of quadratic irrationals for
//! cross-verification runs.

use std::collections::HashSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::QuadraticSurd;

/// Radicands drawn from; all squarefree and small enough that exact
/// arithmetic stays fast.
const RADICANDS: [i64; 6] = [2, 3, 5, 6, 7, 10];

/// `count` distinct irrationals (a + b√d)/c with |a|, |b| ≤ 20, 1 ≤ c ≤ 20.
/// Deterministic in `seed`.
pub fn sample_surds(seed: u64, count: usize) -> Vec<QuadraticSurd> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a = rng.gen_range(-20i64..=20);
        let mut b = rng.gen_range(-20i64..=20);
        if b == 0 {
            b = 1;
        }
        let c = rng.gen_range(1i64..=20);
        let d = RADICANDS[rng.gen_range(0..RADICANDS.len())];
        let x = QuadraticSurd::new(a.into(), b.into(), c.into(), d.into())
            .expect("sampled parameters are valid");
        debug_assert!(!x.is_rational());
        if seen.insert(x.clone()) {
            out.push(x);
        }
    }
    out
}

/// Like `sample_surds` but mapped into the open unit interval by taking
/// fractional parts (still irrational, so never an endpoint).
pub fn sample_unit_surds(seed: u64, count: usize) -> Vec<QuadraticSurd> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a = rng.gen_range(-20i64..=20);
        let mut b = rng.gen_range(-20i64..=20);
        if b == 0 {
            b = 1;
        }
        let c = rng.gen_range(1i64..=20);
        let d = RADICANDS[rng.gen_range(0..RADICANDS.len())];
        let x = QuadraticSurd::new(a.into(), b.into(), c.into(), d.into())
            .expect("sampled parameters are valid")
            .fract();
        if seen.insert(x.clone()) {
            out.push(x);
        }
    }
    out
}
