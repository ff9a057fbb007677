//! End-to-end acceptance checks.
//!
//! Each test is one criterion, verified at a realistic size and printed as
//! a single `[acceptance] name: pass (N ms)` line (visible with
//! `cargo test -- --nocapture`). The criteria cross-verify the three
//! independent computation routes — continued fractions, reflection words,
//! and definitional scans — and the interval-map and lattice-geometry
//! characterizations built on top of them.

use std::collections::HashSet;
use std::time::Instant;

use num::{BigInt, BigRational, One, Signed, Zero};
use parity_cf::class::ALL_CLASSES;
use parity_cf::delta::{approximation_sets, cylinder, geometric_symbols, DeltaStream};
use parity_cf::exact::is_primitive;
use parity_cf::maps::{
    even_inverse_orbit, map_step, oddodd_inverse_orbit, orbit, CfMapKind, ALL_MAP_KINDS,
};
use parity_cf::oracle;
use parity_cf::parity::route_sets;
use parity_cf::rcf::RcfStream;
use parity_cf::sample::{sample_surds, sample_unit_surds};
use parity_cf::{
    parity_of_rational, ApproxSets, ClassPair, Error, ExtRational, Limit, Mat2, ParityClass,
    QuadraticSurd,
};

fn criterion(name: &str, body: impl FnOnce()) {
    let start = Instant::now();
    body();
    println!(
        "[acceptance] {name}: pass ({} ms)",
        start.elapsed().as_millis()
    );
}

fn surd(a: i64, b: i64, c: i64, d: i64) -> QuadraticSurd {
    QuadraticSurd::new(a.into(), b.into(), c.into(), d.into()).unwrap()
}

fn sqrt2_minus_1() -> QuadraticSurd {
    surd(-1, 1, 1, 2)
}

fn rats(pairs: &[(i64, i64)]) -> Vec<BigRational> {
    pairs
        .iter()
        .map(|&(p, q)| BigRational::new(p.into(), q.into()))
        .collect()
}

fn delta_sets(x: &QuadraticSurd, qmax: i64) -> ApproxSets {
    let mut stream = DeltaStream::from_surd(x, 8).unwrap();
    approximation_sets(&mut stream, &Limit::DenomAtMost(qmax.into()), 4096)
        .unwrap()
        .sets
}

fn rcf_sets(x: &QuadraticSurd, qmax: i64) -> ApproxSets {
    let mut stream = RcfStream::from_surd(x, 8).unwrap();
    route_sets(&mut stream, &Limit::DenomAtMost(qmax.into())).unwrap()
}

#[test]
fn golden_sets_sqrt2() {
    criterion("golden_sets_sqrt2", || {
        let expected = ApproxSets {
            best: rats(&[(0, 1), (1, 2), (2, 5), (5, 12), (12, 29)]),
            signed: rats(&[
                (0, 1),
                (1, 1),
                (1, 2),
                (1, 3),
                (2, 5),
                (3, 7),
                (5, 12),
                (7, 17),
                (12, 29),
                (17, 41),
            ]),
            signed_only: [
                rats(&[(1, 1), (3, 7), (17, 41)]),
                rats(&[]),
                rats(&[(1, 3), (7, 17)]),
            ],
            best_single: [
                rats(&[(0, 1), (2, 5), (12, 29)]),
                rats(&[(1, 1), (1, 3), (3, 7), (7, 17), (17, 41)]),
                rats(&[(1, 2), (5, 12)]),
            ],
            best_pair: [
                rats(&[(1, 1), (1, 2), (3, 7), (5, 12), (17, 41)]),
                rats(&[(0, 1), (1, 2), (2, 5), (5, 12), (12, 29)]),
                rats(&[(0, 1), (1, 3), (2, 5), (7, 17), (12, 29)]),
            ],
        };
        let x = sqrt2_minus_1();
        let scanned = oracle::brute_sets(&x, 50).unwrap();
        assert_eq!(scanned, expected, "scan: {:?}", scanned.diff(&expected));
        let routed = rcf_sets(&x, 50);
        assert_eq!(routed, expected, "cf route: {:?}", routed.diff(&expected));
        let worded = delta_sets(&x, 50);
        assert_eq!(worded, expected, "word route: {:?}", worded.diff(&expected));
    });
}

#[test]
fn pell_matrix_powers_and_cylinders() {
    criterion("pell_matrix_powers_and_cylinders", || {
        let pell: Vec<BigInt> = {
            let mut v = vec![BigInt::one(), BigInt::from(0)];
            while v.len() < 16 {
                let n = v.len();
                v.push(2 * &v[n - 1] + &v[n - 2]);
            }
            v
        };
        let p = |i: i64| pell[(i + 1) as usize].clone();

        let period = Mat2::reflection(ParityClass::Inf)
            .mul(&Mat2::reflection(ParityClass::One))
            .mul(&Mat2::reflection(ParityClass::Zero))
            .mul(&Mat2::reflection(ParityClass::One));
        for k in 1..=5i64 {
            let expect = Mat2::new(p(2 * k - 1), p(2 * k), p(2 * k), p(2 * k + 1));
            assert!(
                period.pow(k as u64).proj_eq(&expect),
                "period power k = {k}"
            );
        }

        let x = sqrt2_minus_1();
        let mut s = DeltaStream::from_surd(&x, 8).unwrap();
        let frac = |a: BigInt, b: BigInt| ExtRational::from_fraction(a, b);
        for k in 0..3i64 {
            let at = |j: i64| (4 * k + j) as usize;
            let expected = [
                (
                    frac(p(2 * k), p(2 * k + 1)),
                    frac(p(2 * k - 1) + p(2 * k), p(2 * k) + p(2 * k + 1)),
                ),
                (
                    frac(p(2 * k), p(2 * k + 1)),
                    frac(p(2 * k + 1), p(2 * k + 2)),
                ),
                (
                    frac(p(2 * k) + p(2 * k + 1), p(2 * k + 1) + p(2 * k + 2)),
                    frac(p(2 * k + 1), p(2 * k + 2)),
                ),
                (
                    frac(p(2 * k + 2), p(2 * k + 3)),
                    frac(p(2 * k + 1), p(2 * k + 2)),
                ),
            ];
            for (j, want) in expected.iter().enumerate() {
                let got = cylinder(&mut s, at(j as i64 + 1)).unwrap();
                assert_eq!(got, *want, "depth {}", at(j as i64 + 1));
            }
        }
    });
}

#[test]
fn route_equivalence_sampled() {
    criterion("route_equivalence_sampled", || {
        for x in sample_surds(1001, 50) {
            let scanned = oracle::brute_sets(&x, 1000).unwrap();
            let routed = rcf_sets(&x, 1000);
            assert_eq!(routed, scanned, "x = {x}: {:?}", routed.diff(&scanned));
            let worded = delta_sets(&x, 1000);
            assert_eq!(worded, scanned, "x = {x}: {:?}", worded.diff(&scanned));
        }
    });
}

#[test]
fn class_set_identities_and_strictness() {
    criterion("class_set_identities_and_strictness", || {
        let is_sorted = |v: &[BigRational]| {
            v.windows(2)
                .all(|w| (w[0].denom(), w[0].numer()) <= (w[1].denom(), w[1].numer()))
        };
        for x in sample_surds(1002, 12) {
            let sets = oracle::brute_sets(&x, 300).unwrap();

            // every one-sided best value is either two-sided best or
            // two-sided-only with exactly one witness class
            let mut rebuilt: Vec<BigRational> = sets.best.clone();
            for only in &sets.signed_only {
                for v in only {
                    assert!(
                        !sets.best.contains(v),
                        "two-sided-only value {v} in best, x = {x}"
                    );
                    rebuilt.push(v.clone());
                }
            }
            let mut signed = sets.signed.clone();
            let key = |r: &BigRational| (r.denom().clone(), r.numer().clone());
            rebuilt.sort_by_key(key);
            signed.sort_by_key(key);
            assert_eq!(rebuilt, signed, "best ⊔ one-sided-only ≠ signed, x = {x}");

            // the single-class sets are the parity fibers of the one-sided set
            for c in ALL_CLASSES {
                let fiber: Vec<BigRational> = sets
                    .signed
                    .iter()
                    .filter(|r| parity_of_rational(r) == c)
                    .cloned()
                    .collect();
                assert_eq!(fiber, *sets.single_set(c), "class {c} fiber, x = {x}");
            }

            // each pair set is the pair fiber of best plus the one-sided-only
            // values witnessed by the missing class
            for pair in ClassPair::all() {
                let missing = pair.complement();
                let mut expect: Vec<BigRational> = sets
                    .best
                    .iter()
                    .filter(|r| pair.contains(parity_of_rational(r)))
                    .cloned()
                    .collect();
                expect.extend(sets.signed_only[missing.index()].iter().cloned());
                expect.sort_by_key(key);
                assert_eq!(expect, *sets.pair_set(pair), "pair {pair}, x = {x}");
            }

            // two pair sets meet exactly in the shared parity fiber of best
            for c in ALL_CLASSES {
                let others: Vec<ParityClass> =
                    ALL_CLASSES.into_iter().filter(|o| *o != c).collect();
                let (a, b) = (ClassPair::new(c, others[0]), ClassPair::new(c, others[1]));
                let inter: Vec<BigRational> = sets
                    .pair_set(a)
                    .iter()
                    .filter(|r| sets.pair_set(b).contains(r))
                    .cloned()
                    .collect();
                let fiber: Vec<BigRational> = sets
                    .best
                    .iter()
                    .filter(|r| parity_of_rational(r) == c)
                    .cloned()
                    .collect();
                assert_eq!(inter, fiber, "pair intersection at {c}, x = {x}");
            }

            for v in [&sets.best, &sets.signed] {
                assert!(is_sorted(v), "unsorted output, x = {x}");
            }
        }

        // strictness: for x = sqrt(2)-1 the value 3/7 has odd/odd parity yet
        // belongs only to the pair missing class 0 — the class-0 witness 2/5
        // approximates strictly better one-sidedly
        let x = sqrt2_minus_1();
        let sets = oracle::brute_sets(&x, 50).unwrap();
        let v = BigRational::new(3.into(), 7.into());
        assert_eq!(parity_of_rational(&v), ParityClass::One);
        let with_01 = ClassPair::new(ParityClass::Zero, ParityClass::One);
        let with_1inf = ClassPair::new(ParityClass::One, ParityClass::Inf);
        assert!(!sets.pair_set(with_01).contains(&v));
        assert!(sets.pair_set(with_1inf).contains(&v));
        let better = oracle::signed_error(&x, &BigInt::from(2), &BigInt::from(5));
        let worse = oracle::signed_error(&x, &BigInt::from(3), &BigInt::from(7));
        assert!(better.cmp_abs(&worse).unwrap().is_lt());
    });
}

#[test]
fn reflection_word_machinery() {
    criterion("reflection_word_machinery", || {
        // the permutation bookkeeping and the geometric orbit agree deeply,
        // adjacent symbols differ, prefix products stay unimodular, and
        // cylinders nest with parity-clean Farey-neighbor endpoints
        for x in sample_surds(1003, 10) {
            let mut s = DeltaStream::from_surd(&x, 8).unwrap();
            s.extend_to(2000).unwrap();
            assert_eq!(geometric_symbols(&x, 2000).unwrap(), s.symbols(), "x = {x}");
            assert!(
                s.symbols().windows(2).all(|w| w[0] != w[1]),
                "adjacent symbols repeat, x = {x}"
            );
            for m in [1usize, 7, 40, 200, 1000] {
                assert!(
                    s.prefix_matrix(m).unwrap().det().abs().is_one(),
                    "x = {x}, m = {m}"
                );
            }

            let m0 = s.first_inf().unwrap();
            let mut previous: Option<(ExtRational, ExtRational)> = None;
            for m in 1..=40usize {
                let (lo, hi) = cylinder(&mut s, m).unwrap();
                let (lp, lq) = lo.as_fraction();
                let (hp, hq) = hi.as_fraction();
                assert!((lp * hq - hp * lq).abs().is_one(), "x = {x}, depth {m}");
                let alpha = s.symbol(m).unwrap();
                let got: HashSet<ParityClass> = [lo.parity(), hi.parity()].into();
                let want: HashSet<ParityClass> =
                    ALL_CLASSES.into_iter().filter(|c| *c != alpha).collect();
                assert_eq!(got, want, "endpoint parities, x = {x}, depth {m}");
                if m >= m0 {
                    let inside = lo.finite().map_or(true, |l| x.cmp_rat(l).is_gt())
                        && hi.finite().map_or(true, |h| x.cmp_rat(h).is_lt());
                    assert!(inside, "x = {x} outside its depth-{m} cylinder");
                }
                if let Some((plo, phi)) = previous {
                    let shared = [&lo, &hi]
                        .into_iter()
                        .filter(|e| **e == plo || **e == phi)
                        .count();
                    assert_eq!(
                        shared, 1,
                        "cylinders must share one endpoint, x = {x}, depth {m}"
                    );
                }
                previous = Some((lo, hi));
            }
        }

        // every enumerated value carries a canonical word that evaluates
        // back to it, and distinct values get distinct words
        for x in sample_surds(1004, 6) {
            let mut s = DeltaStream::from_surd(&x, 8).unwrap();
            let out = approximation_sets(&mut s, &Limit::DenomAtMost(200.into()), 4096).unwrap();
            let mut rendered = HashSet::new();
            for (value, (word, _)) in &out.words {
                assert_eq!(&word.canonical(), word, "not canonical: {word}");
                assert_eq!(
                    word.eval(),
                    ExtRational::Finite(value.clone()),
                    "word {word}"
                );
                let text = word.to_string();
                assert_eq!(text.parse::<parity_cf::DeltaWord>().unwrap(), *word);
                assert!(rendered.insert(text), "duplicate word for distinct values");
            }
            for v in &out.sets.signed {
                assert!(out.words.contains_key(v), "missing word for {v}");
            }
            for v in &out.sets.best {
                assert!(out.words.contains_key(v), "missing word for {v}");
            }
        }
    });
}

#[test]
fn interval_maps_and_inverse_orbits() {
    criterion("interval_maps_and_inverse_orbits", || {
        let one = BigRational::one();
        let half = BigRational::new(1.into(), 2.into());
        for x in sample_unit_surds(1005, 20) {
            // symbolic steps match the numeric closed forms along long orbits
            let mut cur = [
                x.clone(),
                x.clone(),
                x.clone(),
                x.clone(),
                x.clone(),
                x.clone(),
            ];
            for _ in 0..1000 {
                for (slot, kind) in ALL_MAP_KINDS.into_iter().enumerate() {
                    let input = cur[slot].clone();
                    let step = map_step(kind, &input).unwrap();
                    assert!(
                        step.output.signum() > 0 && step.output.cmp_rat(&one).is_lt(),
                        "{kind} left the unit interval at {input}"
                    );
                    let expect = match kind {
                        CfMapKind::Farey => {
                            if input.cmp_rat(&half).is_lt() {
                                Some(input.div(&input.neg().add_rat(&one)).unwrap())
                            } else {
                                Some(input.neg().add_rat(&one).div(&input).unwrap())
                            }
                        }
                        CfMapKind::Gauss
                        | CfMapKind::ByExcess
                        | CfMapKind::Even
                        | CfMapKind::Odd => {
                            let mut rcf = RcfStream::from_surd(&input, 2).unwrap();
                            rcf.extend_to(2).unwrap();
                            let a1 = rcf.term(1).clone();
                            let down = input.recip().unwrap().sub_int(&a1);
                            let up = down.neg().add_rat(&one);
                            let even = (&a1 % BigInt::from(2)).is_zero();
                            Some(match kind {
                                CfMapKind::Gauss => down,
                                CfMapKind::ByExcess => up,
                                CfMapKind::Even => {
                                    if even {
                                        down
                                    } else {
                                        up
                                    }
                                }
                                CfMapKind::Odd => {
                                    if even {
                                        up
                                    } else {
                                        down
                                    }
                                }
                                _ => unreachable!(),
                            })
                        }
                        CfMapKind::OddOdd => None,
                    };
                    if let Some(form) = expect {
                        assert!(
                            step.output.cmp_exact(&form).unwrap().is_eq(),
                            "{kind} disagrees with its closed form at {input}"
                        );
                    }
                    cur[slot] = step.output;
                }
            }

            // one Gauss step is a₁ Farey steps
            let gauss = map_step(CfMapKind::Gauss, &x).unwrap();
            let mut rcf = RcfStream::from_surd(&x, 2).unwrap();
            rcf.extend_to(2).unwrap();
            let a1: usize = rcf.term(1).try_into().unwrap();
            let chain = orbit(CfMapKind::Farey, &x, a1).unwrap();
            assert!(chain
                .last()
                .unwrap()
                .output
                .cmp_exact(&gauss.output)
                .unwrap()
                .is_eq());
            let total = chain
                .iter()
                .fold(Mat2::identity(), |acc, s| s.branch.mul(&acc));
            assert!(total.proj_eq(&gauss.branch), "x = {x}");

            // each step relabels and shifts the symbol stream
            for kind in ALL_MAP_KINDS {
                let step = map_step(kind, &x).unwrap();
                let mut input = DeltaStream::from_surd(&x, 8).unwrap();
                let mut output = DeltaStream::from_surd(&step.output, 8).unwrap();
                for j in 1..=8 {
                    let expect = step
                        .relabel
                        .apply(input.symbol(step.symbols_consumed + j).unwrap());
                    assert_eq!(output.symbol(j).unwrap(), expect, "{kind} at {x}");
                }
            }
        }

        // pulled-back anchors enumerate the class-restricted sets in order
        let pair = ClassPair::new(ParityClass::Zero, ParityClass::Inf);
        for x in sample_unit_surds(1006, 50) {
            let mut rcf = RcfStream::from_surd(&x, 8).unwrap();
            let sets = route_sets(&mut rcf, &Limit::Count(12)).unwrap();
            assert_eq!(
                even_inverse_orbit(&x, 12).unwrap(),
                *sets.pair_set(pair),
                "x = {x}"
            );
            assert_eq!(
                oddodd_inverse_orbit(&x, 12).unwrap(),
                *sets.single_set(ParityClass::One),
                "x = {x}"
            );
        }
    });
}

#[test]
fn parallelogram_criteria() {
    criterion("parallelogram_criteria", || {
        // lattice-point criteria reproduce the definitional scan
        for x in sample_surds(1007, 20) {
            let geometric = oracle::geometric_sets(&x, 200).unwrap();
            let scanned = oracle::brute_sets(&x, 200).unwrap();
            assert_eq!(
                geometric,
                scanned,
                "x = {x}: {:?}",
                geometric.diff(&scanned)
            );
        }

        // a symmetric parallelogram clean of same-class points forces the
        // one-sided one clean, and its extra points are pairwise parallel
        let mut checked = 0usize;
        for x in sample_surds(1008, 10) {
            for q in 1..=100i64 {
                let q = BigInt::from(q);
                let floor = x.mul_int(&q).floor();
                for p in [floor.clone(), &floor + 1] {
                    if is_primitive(&p, &q) {
                        oracle::clean_parallelogram_check(&x, &p, &q).unwrap();
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked >= 1000, "only {checked} primitive pairs checked");
    });
}

#[test]
fn boundary_behaviors() {
    criterion("boundary_behaviors", || {
        // a unit first partial quotient drops the first convergent from the
        // two-sided set and leaves it one-sided with an even/odd witness
        let phi = surd(1, 1, 2, 5);
        let scanned = oracle::brute_sets(&phi, 30).unwrap();
        assert_eq!(
            scanned.best,
            rats(&[(2, 1), (3, 2), (5, 3), (8, 5), (13, 8), (21, 13), (34, 21)])
        );
        assert_eq!(
            scanned.signed_only[ParityClass::Zero.index()],
            rats(&[(1, 1)])
        );
        assert_eq!(rcf_sets(&phi, 30), scanned);
        assert_eq!(delta_sets(&phi, 30), scanned);

        // negative numbers work throughout
        let neg = surd(0, -1, 1, 2);
        let scanned = oracle::brute_sets(&neg, 30).unwrap();
        assert_eq!(scanned.signed[..2], rats(&[(-2, 1), (-1, 1)])[..]);
        assert_eq!(rcf_sets(&neg, 30), scanned);
        assert_eq!(delta_sets(&neg, 30), scanned);

        // rationals are rejected by every route
        let third = surd(1, 0, 3, 2);
        assert_eq!(
            oracle::brute_sets(&third, 10).unwrap_err(),
            Error::RationalInput
        );
        assert_eq!(
            RcfStream::from_surd(&third, 4).unwrap_err(),
            Error::RationalInput
        );
        assert_eq!(
            DeltaStream::from_surd(&third, 4).unwrap_err(),
            Error::RationalInput
        );
        assert_eq!(
            map_step(CfMapKind::Gauss, &third).unwrap_err(),
            Error::RationalInput
        );
        assert_eq!(
            RcfStream::from_decimal_str("0.5", 8).unwrap_err(),
            Error::RationalInput
        );

        // decimal input certifies terms while the precision lasts and then
        // reports exhaustion instead of guessing
        let lit = "0.4142135623730950488016887242096980785696";
        let mut stream = RcfStream::from_decimal_str(lit, 64).unwrap();
        let sets = route_sets(&mut stream, &Limit::DenomAtMost(100.into())).unwrap();
        assert_eq!(sets, rcf_sets(&sqrt2_minus_1(), 100));
        let mut coarse = RcfStream::from_decimal_str("0.41", 64).unwrap();
        let err = route_sets(&mut coarse, &Limit::DenomAtMost(100_000.into())).unwrap_err();
        assert!(
            matches!(err, Error::PrecisionExhausted { .. }),
            "got {err:?}"
        );

        // a count limit the word route cannot certify is an error, not a
        // silently short answer
        let mut s = DeltaStream::from_surd(&sqrt2_minus_1(), 8).unwrap();
        assert_eq!(
            approximation_sets(&mut s, &Limit::Count(1), 64).unwrap_err(),
            Error::InsufficientExpansion { have: 64 }
        );
    });
}
