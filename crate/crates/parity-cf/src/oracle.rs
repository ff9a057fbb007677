//! Brute-force definitional oracles.
//!
//! Everything here computes approximation sets straight from their
//! definitions by scanning denominators in order — no continued fractions,
//! no symbolic machinery — so the clever routes have something independent
//! to agree with. A second, geometric oracle decides the same memberships by
//! enumerating lattice points in parallelograms.
//!
//! Scans keep running minima of |b·x - a| (as exact surds) over all
//! lowest-terms fractions processed so far: overall, per sign of b·x - a,
//! and per parity class. For a fixed b, only a ∈ {⌊bx⌋, ⌈bx⌉} can matter
//! unconstrained (anything farther is off by more than 1); within one parity
//! class the admissible numerators step by 2, so the nearest one is found by
//! walking outward ring by ring, and the first ring with a hit already holds
//! the class minimum. Ties never occur: |qx - p| = |bx - a| with
//! (p,q) ≠ ±(a,b) would force x rational.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::class::{parity_of, ClassFilter, ParityClass, ALL_CLASSES};
use crate::error::{Error, Result};
use crate::exact::{is_primitive, QuadraticSurd};
use crate::sets::ApproxSets;

/// Signed error q·x - p as an exact surd.
pub fn signed_error(x: &QuadraticSurd, p: &BigInt, q: &BigInt) -> QuadraticSurd {
    x.mul_int(q).sub_int(p)
}

/// Strictly-less comparison of absolute errors (same field, so exact).
fn abs_less(a: &QuadraticSurd, b: &QuadraticSurd) -> bool {
    a.cmp_abs(b).expect("errors live in the field of x").is_lt()
}

fn min_abs(slot: &mut Option<QuadraticSurd>, e: &QuadraticSurd) {
    match slot {
        Some(cur) if !abs_less(e, cur) => {}
        _ => *slot = Some(e.clone()),
    }
}

/// The lowest-terms numerator closest to q·x within one parity class, with
/// its signed error. Ring r tries ⌊qx⌋ - r and ⌈qx⌉ + r, whose errors lie in
/// (r, r+1), so rings are monotone and the first hit wins.
fn class_candidate(
    x: &QuadraticSurd,
    q: &BigInt,
    class: ParityClass,
    qx_floor: &BigInt,
) -> Option<(BigInt, QuadraticSurd)> {
    let feasible = match class {
        ParityClass::Inf => q.is_even(),
        _ => q.is_odd(),
    };
    if !feasible {
        return None;
    }
    let cap = BigInt::from(4) * q + BigInt::from(4);
    let mut offset = BigInt::zero();
    while offset <= cap {
        let mut hit: Option<(BigInt, QuadraticSurd)> = None;
        for p in [qx_floor - &offset, qx_floor + &offset + 1u32] {
            if is_primitive(&p, q) && parity_of(&p, q) == class {
                let e = signed_error(x, &p, q);
                match &hit {
                    Some((_, cur)) if !abs_less(&e, cur) => {}
                    _ => hit = Some((p, e)),
                }
            }
        }
        if hit.is_some() {
            return hit;
        }
        offset += 1u32;
    }
    // A coprime residue in the right parity always exists well inside the
    // cap; feasible classes never land here.
    unreachable!("no class candidate within the search cap")
}

/// All approximation sets with denominator ≤ `qmax`, straight from the
/// definitions.
pub fn brute_sets(x: &QuadraticSurd, qmax: impl Into<BigInt>) -> Result<ApproxSets> {
    if x.is_rational() {
        return Err(Error::RationalInput);
    }
    let qmax = qmax.into();
    let mut sets = ApproxSets::default();

    // Running minima over processed denominators.
    let mut best_all: Option<QuadraticSurd> = None;
    let mut best_pos: Option<QuadraticSurd> = None; // over qx - p > 0
    let mut best_neg: Option<QuadraticSurd> = None;
    // Per class: the two smallest errors seen, with their fractions, so a
    // member can be tested against the best class witness other than itself.
    let mut class_best: [Vec<(BigRational, QuadraticSurd)>; 3] = Default::default();

    let mut q = BigInt::one();
    while q <= qmax {
        let qx = x.mul_int(&q);
        let fl = qx.floor();
        let cl = &fl + 1u32;

        // Plain and signed membership: floor (error > 0) and ceil (< 0).
        let floor_ok = is_primitive(&fl, &q);
        let ceil_ok = is_primitive(&cl, &q);
        let e_floor = signed_error(x, &fl, &q);
        let e_ceil = signed_error(x, &cl, &q);
        debug_assert!(e_floor.is_positive() && e_ceil.is_negative());

        let mut emitted = [(false, false), (false, false)]; // (in_signed, in_best) for floor, ceil
        if floor_ok {
            let beats_prior = best_all.as_ref().map_or(true, |b| abs_less(&e_floor, b));
            let beats_same_q = !ceil_ok || abs_less(&e_floor, &e_ceil);
            if beats_prior && beats_same_q {
                sets.best.push(BigRational::new(fl.clone(), q.clone()));
                emitted[0].1 = true;
            }
            if best_pos.as_ref().map_or(true, |b| abs_less(&e_floor, b)) {
                sets.signed.push(BigRational::new(fl.clone(), q.clone()));
                emitted[0].0 = true;
            }
        }
        if ceil_ok {
            let beats_prior = best_all.as_ref().map_or(true, |b| abs_less(&e_ceil, b));
            let beats_same_q = !floor_ok || abs_less(&e_ceil, &e_floor);
            if beats_prior && beats_same_q {
                sets.best.push(BigRational::new(cl.clone(), q.clone()));
                emitted[1].1 = true;
            }
            if best_neg.as_ref().map_or(true, |b| abs_less(&e_ceil, b)) {
                sets.signed.push(BigRational::new(cl.clone(), q.clone()));
                emitted[1].0 = true;
            }
        }

        // Class candidates for this q (at most one per class).
        let cands: [Option<(BigInt, QuadraticSurd)>; 3] = [
            class_candidate(x, &q, ParityClass::Zero, &fl),
            class_candidate(x, &q, ParityClass::One, &fl),
            class_candidate(x, &q, ParityClass::Inf, &fl),
        ];

        // Single-class membership: beat every prior same-class error. Any
        // same-q same-class rival is farther out by construction.
        for c in ALL_CLASSES {
            if let Some((p, e)) = &cands[c.index()] {
                let beats_prior = class_best[c.index()]
                    .first()
                    .map_or(true, |(_, b)| abs_less(e, b));
                if beats_prior {
                    sets.best_single[c.index()].push(BigRational::new(p.clone(), q.clone()));
                }
            }
        }

        // Pair membership: beat both classes' priors and the other class's
        // candidate at the same denominator.
        for missing in ALL_CLASSES {
            let (ca, cb) = match missing {
                ParityClass::Zero => (ParityClass::One, ParityClass::Inf),
                ParityClass::One => (ParityClass::Zero, ParityClass::Inf),
                ParityClass::Inf => (ParityClass::Zero, ParityClass::One),
            };
            for (mine, other) in [(ca, cb), (cb, ca)] {
                if let Some((p, e)) = &cands[mine.index()] {
                    let beats_prior = [mine, other].iter().all(|cc| {
                        class_best[cc.index()]
                            .first()
                            .map_or(true, |(_, b)| abs_less(e, b))
                    });
                    let beats_same_q = cands[other.index()]
                        .as_ref()
                        .map_or(true, |(_, eo)| abs_less(e, eo));
                    if beats_prior && beats_same_q {
                        sets.best_pair[missing.index()]
                            .push(BigRational::new(p.clone(), q.clone()));
                    }
                }
            }
        }

        // Fold this denominator's candidates into the running minima.
        if floor_ok {
            min_abs(&mut best_all, &e_floor);
            min_abs(&mut best_pos, &e_floor);
        }
        if ceil_ok {
            min_abs(&mut best_all, &e_ceil);
            min_abs(&mut best_neg, &e_ceil);
        }
        for c in ALL_CLASSES {
            if let Some((p, e)) = &cands[c.index()] {
                let fr = BigRational::new(p.clone(), q.clone());
                let list = &mut class_best[c.index()];
                list.push((fr, e.clone()));
                list.sort_by(|(_, a), (_, b)| a.cmp_abs(b).expect("same field"));
                list.truncate(2);
            }
        }

        // Signed-but-not-best members get classified right away, while the
        // running structures hold exactly the fractions with b ≤ q. The
        // defeating witness is the minimal-error fraction other than the
        // member itself; witnesses are unique up to sign, so its class is
        // well defined.
        for ((in_s, in_b), (p, e)) in emitted.iter().zip([(&fl, &e_floor), (&cl, &e_ceil)]) {
            if *in_s && !*in_b {
                let member = BigRational::new(p.clone(), q.clone());
                let mut witness: Option<(ParityClass, QuadraticSurd)> = None;
                for c in ALL_CLASSES {
                    for (fr, ew) in &class_best[c.index()] {
                        if fr != &member && abs_less(ew, e) {
                            match &witness {
                                Some((_, w)) if !abs_less(ew, w) => {}
                                _ => witness = Some((c, ew.clone())),
                            }
                        }
                    }
                }
                let (c, _) = witness.expect("a signed non-best member always has a witness");
                sets.signed_only[c.index()].push(member);
            }
        }

        q += 1u32;
    }

    sets.sort();
    Ok(sets)
}

/// Best approximations only (thin wrapper over the full scan).
pub fn brute_best(x: &QuadraticSurd, qmax: impl Into<BigInt>) -> Result<Vec<BigRational>> {
    Ok(brute_sets(x, qmax)?.best)
}

/// Best one-sided approximations only.
pub fn brute_signed(x: &QuadraticSurd, qmax: impl Into<BigInt>) -> Result<Vec<BigRational>> {
    Ok(brute_sets(x, qmax)?.signed)
}

/// Class- or pair-restricted best approximations.
pub fn brute_best_class(
    x: &QuadraticSurd,
    filter: ClassFilter,
    qmax: impl Into<BigInt>,
) -> Result<Vec<BigRational>> {
    let sets = brute_sets(x, qmax)?;
    Ok(match filter {
        ClassFilter::Single(c) => sets.best_single[c.index()].clone(),
        ClassFilter::Pair(p) => sets.pair_set(p).clone(),
    })
}

/// Signed-but-not-best members whose defeating witness lies in `class`.
pub fn brute_signed_only(
    x: &QuadraticSurd,
    class: ParityClass,
    qmax: impl Into<BigInt>,
) -> Result<Vec<BigRational>> {
    Ok(brute_sets(x, qmax)?.signed_only[class.index()].clone())
}

// ---------------------------------------------------------------------------
// Geometric (lattice) oracle
// ---------------------------------------------------------------------------

/// Closed symmetric parallelogram membership: |u₂| ≤ q and
/// |u₁ - u₂x| ≤ |p - qx|.
pub fn best_region_contains(
    x: &QuadraticSurd,
    v: (&BigInt, &BigInt),
    u: (&BigInt, &BigInt),
) -> bool {
    let (p, q) = v;
    let (u1, u2) = u;
    if u2.abs() > q.abs() {
        return false;
    }
    let ev = signed_error(x, p, q);
    let eu = signed_error(x, u1, u2);
    !matches!(
        eu.cmp_abs(&ev).expect("same field"),
        std::cmp::Ordering::Greater
    )
}

/// Closed one-sided parallelogram membership: 0 ≤ u₂ ≤ q and
/// (u₁ - u₂x)/(p - qx) ∈ [0, 1].
pub fn signed_region_contains(
    x: &QuadraticSurd,
    v: (&BigInt, &BigInt),
    u: (&BigInt, &BigInt),
) -> bool {
    let (p, q) = v;
    let (u1, u2) = u;
    if u2.is_negative() || u2 > q {
        return false;
    }
    let ev = signed_error(x, p, q).neg(); // p - qx
    let eu = signed_error(x, u1, u2).neg();
    let same_side = eu.is_zero() || eu.signum() == ev.signum();
    same_side
        && !matches!(
            eu.cmp_abs(&ev).expect("same field"),
            std::cmp::Ordering::Greater
        )
}

/// All nonzero integer points of the closed symmetric parallelogram around
/// v = (p, q) (including ±v).
pub fn best_region_points(x: &QuadraticSurd, p: &BigInt, q: &BigInt) -> Vec<(BigInt, BigInt)> {
    let ev = signed_error(x, p, q).abs();
    let mut out = Vec::new();
    let mut u2 = -q.clone();
    while &u2 <= q {
        let center = x.mul_int(&u2);
        let lo = center.sub(&ev).expect("same field").ceil();
        let hi = center.add(&ev).expect("same field").floor();
        let mut u1 = lo;
        while u1 <= hi {
            if !(u1.is_zero() && u2.is_zero()) {
                out.push((u1.clone(), u2.clone()));
            }
            u1 += 1u32;
        }
        u2 += 1u32;
    }
    out
}

/// All integer points of the closed one-sided parallelogram for v = (p, q),
/// excluding the origin and v itself.
pub fn signed_region_points(x: &QuadraticSurd, p: &BigInt, q: &BigInt) -> Vec<(BigInt, BigInt)> {
    let ev = signed_error(x, p, q).neg(); // p - qx
    let mut out = Vec::new();
    let mut u2 = BigInt::zero();
    while &u2 <= q {
        let center = x.mul_int(&u2);
        let other = center.add(&ev).expect("same field");
        // u₁ ranges between u₂x and u₂x + (p - qx), whichever order.
        let (lo, hi) = if ev.is_positive() {
            (center.ceil(), other.floor())
        } else {
            (other.ceil(), center.floor())
        };
        let mut u1 = lo;
        while u1 <= hi {
            let is_origin = u1.is_zero() && u2.is_zero();
            let is_v = &u1 == p && &u2 == q;
            if !is_origin && !is_v {
                out.push((u1.clone(), u2.clone()));
            }
            u1 += 1u32;
        }
        u2 += 1u32;
    }
    out
}

/// Same bundle as `brute_sets`, but every membership is decided by lattice
/// enumeration:
/// - best: no primitive point in the symmetric parallelogram besides ±v;
/// - signed: no integer point in the one-sided parallelogram besides 0, v;
/// - class/pair: no primitive point of the admissible classes in the
///   symmetric parallelogram besides ±v;
/// - witness class of a signed-only member: read off the (collinear)
///   primitive extras in its symmetric parallelogram.
pub fn geometric_sets(x: &QuadraticSurd, qmax: impl Into<BigInt>) -> Result<ApproxSets> {
    if x.is_rational() {
        return Err(Error::RationalInput);
    }
    let qmax = qmax.into();
    let mut sets = ApproxSets::default();
    let mut q = BigInt::one();
    while q <= qmax {
        let qx = x.mul_int(&q);
        let fl = qx.floor();
        for p in [fl.clone(), &fl + 1u32] {
            if !is_primitive(&p, &q) {
                continue;
            }
            let value = BigRational::new(p.clone(), q.clone());
            let extras: Vec<(BigInt, BigInt)> = best_region_points(x, &p, &q)
                .into_iter()
                .filter(|(u1, u2)| {
                    let is_v = (u1 == &p && u2 == &q) || (-u1.clone() == p && -u2.clone() == q);
                    !is_v && is_primitive(u1, u2)
                })
                .collect();
            if extras.is_empty() {
                sets.best.push(value.clone());
            }
            if signed_region_points(x, &p, &q).is_empty() {
                sets.signed.push(value.clone());
                if !extras.is_empty() {
                    let classes: std::collections::HashSet<ParityClass> =
                        extras.iter().map(|(u1, u2)| parity_of(u1, u2)).collect();
                    assert_eq!(classes.len(), 1, "witness classes must agree at {value}");
                    let c = *classes.iter().next().expect("nonempty");
                    sets.signed_only[c.index()].push(value.clone());
                }
            }
            let my_class = parity_of(&p, &q);
            let has_extra_of = |admissible: &dyn Fn(ParityClass) -> bool| {
                extras.iter().any(|(u1, u2)| admissible(parity_of(u1, u2)))
            };
            if !has_extra_of(&|c| c == my_class) {
                sets.best_single[my_class.index()].push(value.clone());
            }
            for missing in ALL_CLASSES {
                if missing == my_class {
                    continue;
                }
                if !has_extra_of(&|c| c != missing) {
                    sets.best_pair[missing.index()].push(value.clone());
                }
            }
        }
        q += 1u32;
    }
    sets.sort();
    Ok(sets)
}

/// Check the two clean-parallelogram implications for one (x, v) pair:
/// (i) no same-class primitive extras in the symmetric parallelogram forces
/// an empty one-sided parallelogram; (ii) an empty one-sided parallelogram
/// forces no same-class primitive extras, with all symmetric extras
/// collinear. Returns (symmetric-clean, one-sided-clean) on success.
pub fn clean_parallelogram_check(
    x: &QuadraticSurd,
    p: &BigInt,
    q: &BigInt,
) -> Result<(bool, bool)> {
    if x.is_rational() {
        return Err(Error::RationalInput);
    }
    let my_class = parity_of(p, q);
    let extras: Vec<(BigInt, BigInt)> = best_region_points(x, p, q)
        .into_iter()
        .filter(|(u1, u2)| {
            let is_v = (u1 == p && u2 == q) || (&-u1.clone() == p && &-u2.clone() == q);
            !is_v
        })
        .collect();
    let primitive_same_class = extras
        .iter()
        .any(|(u1, u2)| is_primitive(u1, u2) && parity_of(u1, u2) == my_class);
    let symmetric_clean = !primitive_same_class;
    let one_sided_clean = signed_region_points(x, p, q).is_empty();

    if symmetric_clean && !one_sided_clean {
        return Err(Error::CheckFailed(format!(
            "clean symmetric region did not force a clean one-sided region at {p}/{q}"
        )));
    }
    if one_sided_clean {
        if primitive_same_class {
            return Err(Error::CheckFailed(format!(
                "clean one-sided region left a same-class primitive extra at {p}/{q}"
            )));
        }
        for (i, (a1, a2)) in extras.iter().enumerate() {
            for (b1, b2) in extras.iter().skip(i + 1) {
                if a1 * b2 - a2 * b1 != BigInt::zero() {
                    return Err(Error::CheckFailed(format!(
                        "non-collinear extras in a clean one-sided region at {p}/{q}"
                    )));
                }
            }
        }
    }
    Ok((symmetric_clean, one_sided_clean))
}
