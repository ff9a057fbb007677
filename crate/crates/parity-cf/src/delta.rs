//! Reflection-word expansions.
//!
//! Every irrational x carries an infinite symbol stream α₁, α₂, … over
//! {0, 1, inf}, with adjacent symbols always distinct. Geometrically the
//! stream tracks an orbit y ← H_α·y of the three reflections
//! H₀ = (-y+2), H₁ = -y, H_inf = y/(2y-1): the symbol is 1 while y < 0,
//! 0 while y > 1, and inf inside the unit interval. Combinatorially the same
//! stream falls out of the continued fraction [a₀; a₁, a₂, …]: the letter
//! word L^{a₀} R^{a₁} L^{a₂} ⋯ (with L⁻¹ when a₀ < 0) is rewritten letter by
//! letter, tracking how each letter permutes the three boundary symbols.
//!
//! Truncating the stream after m symbols and closing it with a two-symbol
//! cycle gives a reflection word; its value is the image of one boundary
//! symbol point under the product of reflections named by the prefix. The
//! two ways of closing at depth m produce exactly the two endpoints of the
//! depth-m cylinder — the interval of reals sharing the first m symbols —
//! and as m grows these endpoints enumerate the one-sided and two-sided
//! best approximation sets of x, with the parity bookkeeping read off the
//! adjacent symbols.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::class::{parity_of_rational, ParityClass, Symbol, ALL_CLASSES};
use crate::error::{Error, Result};
use crate::exact::{ExtRational, ExtendedReal, Mat2, PermS3, QuadraticSurd};
use crate::rcf::RcfStream;
use crate::sets::{ApproxSets, Limit};

/// Lazily generated symbol stream of an irrational, driven by its continued
/// fraction.
#[derive(Debug, Clone)]
pub struct DeltaStream {
    rcf: RcfStream,
    symbols: Vec<Symbol>,
    cum: PermS3,
    /// Next continued-fraction term to expand into letters.
    next_term: usize,
    /// Letters remaining in the current term's block.
    letters_left: BigInt,
    block_sigma: PermS3,
    block_eta: Symbol,
}

impl DeltaStream {
    pub fn from_rcf(rcf: RcfStream) -> DeltaStream {
        DeltaStream {
            rcf,
            symbols: Vec::new(),
            cum: PermS3::identity(),
            next_term: 0,
            letters_left: BigInt::zero(),
            block_sigma: PermS3::identity(),
            block_eta: ParityClass::Zero,
        }
    }

    pub fn from_surd(x: &QuadraticSurd, terms: usize) -> Result<DeltaStream> {
        Ok(DeltaStream::from_rcf(RcfStream::from_surd(x, terms)?))
    }

    /// Move to the next continued-fraction term that contributes letters.
    /// L-letters permute the symbols by (0 1) and name symbol 0 (symbol 1
    /// for the inverted letters of a negative integer part); R-letters
    /// permute by (1 inf) and name symbol inf.
    fn load_term(&mut self) -> Result<()> {
        debug_assert!(self.letters_left.is_zero());
        self.rcf.extend_to(self.next_term + 1)?;
        let a = self.rcf.term(self.next_term).clone();
        let (sigma, eta) = if self.next_term % 2 == 1 {
            (
                PermS3::swap(ParityClass::One, ParityClass::Inf),
                ParityClass::Inf,
            )
        } else if self.next_term == 0 && a.is_negative() {
            (
                PermS3::swap(ParityClass::Zero, ParityClass::One),
                ParityClass::One,
            )
        } else {
            (
                PermS3::swap(ParityClass::Zero, ParityClass::One),
                ParityClass::Zero,
            )
        };
        self.letters_left = a.abs();
        self.block_sigma = sigma;
        self.block_eta = eta;
        self.next_term += 1;
        Ok(())
    }

    fn emit_one(&mut self) -> Result<()> {
        while self.letters_left.is_zero() {
            self.load_term()?;
        }
        let alpha = self.cum.apply(self.block_eta);
        debug_assert!(
            self.symbols.last().map_or(true, |&last| last != alpha),
            "adjacent symbols must differ"
        );
        self.symbols.push(alpha);
        self.cum = self.cum.compose(&self.block_sigma);
        self.letters_left -= 1u32;
        Ok(())
    }

    /// Make at least the first `m` symbols available.
    pub fn extend_to(&mut self, m: usize) -> Result<()> {
        while self.symbols.len() < m {
            self.emit_one()?;
        }
        Ok(())
    }

    /// The symbols generated so far.
    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// α_m (1-based), generating as needed.
    pub fn symbol(&mut self, m: usize) -> Result<Symbol> {
        assert!(m >= 1, "symbols are 1-based");
        self.extend_to(m)?;
        Ok(self.symbols[m - 1])
    }

    /// Position of the first `inf` symbol; equals |a₀| + 1.
    pub fn first_inf(&mut self) -> Result<usize> {
        let mut m = 1;
        loop {
            if self.symbol(m)? == ParityClass::Inf {
                debug_assert_eq!(
                    BigInt::from(m - 1),
                    self.rcf.term(0).abs(),
                    "the first inf symbol sits right after the integer-part letters"
                );
                return Ok(m);
            }
            m += 1;
        }
    }

    /// The symbol complementary to the adjacent pair (α_m, α_{m+1}).
    pub fn delta_at(&mut self, m: usize) -> Result<Symbol> {
        let a = self.symbol(m)?;
        let b = self.symbol(m + 1)?;
        Ok(ParityClass::third(a, b))
    }

    /// H_{α₁}·H_{α₂}⋯H_{α_m}; the identity for m = 0.
    pub fn prefix_matrix(&mut self, m: usize) -> Result<Mat2> {
        self.extend_to(m)?;
        let mut acc = Mat2::identity();
        for s in &self.symbols[..m] {
            acc = acc.mul(&Mat2::reflection(*s));
        }
        Ok(acc)
    }

    /// Detected period of the underlying continued fraction, if any.
    pub fn period(&self) -> Option<(usize, usize)> {
        self.rcf.period()
    }
}

/// The same symbol stream computed the geometric way: read off which of the
/// three boundary arcs y lies in, then reflect. Used to cross-check the
/// permutation bookkeeping.
pub fn geometric_symbols(x: &QuadraticSurd, count: usize) -> Result<Vec<Symbol>> {
    if x.is_rational() {
        return Err(Error::RationalInput);
    }
    let one = BigRational::one();
    let mut y = x.clone();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let alpha = if y.signum() < 0 {
            ParityClass::One
        } else if y.cmp_rat(&one).is_gt() {
            ParityClass::Zero
        } else {
            ParityClass::Inf
        };
        out.push(alpha);
        match Mat2::reflection(alpha).apply(&ExtendedReal::Finite(y)) {
            ExtendedReal::Finite(next) => y = next,
            ExtendedReal::Infinity => unreachable!("reflections keep irrationals finite"),
        }
    }
    Ok(out)
}

/// An eventually-periodic symbol word: a finite prefix followed by a
/// two-symbol cycle, subject to the adjacency rule (consecutive symbols
/// distinct, including across the prefix/cycle seam).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeltaWord {
    prefix: Vec<Symbol>,
    cycle: (Symbol, Symbol),
}

impl DeltaWord {
    pub fn new(prefix: Vec<Symbol>, cycle: (Symbol, Symbol)) -> Result<DeltaWord> {
        let invalid = |message: String| Error::Parse {
            position: 0,
            message,
        };
        if cycle.0 == cycle.1 {
            return Err(invalid("cycle symbols must differ".into()));
        }
        for w in prefix.windows(2) {
            if w[0] == w[1] {
                return Err(invalid(format!(
                    "adjacent symbols must differ, found {},{}",
                    w[0], w[1]
                )));
            }
        }
        if prefix.last() == Some(&cycle.0) {
            return Err(invalid(format!(
                "adjacent symbols must differ at the cycle seam, found {},{}",
                cycle.0, cycle.0
            )));
        }
        Ok(DeltaWord { prefix, cycle })
    }

    pub fn prefix(&self) -> &[Symbol] {
        &self.prefix
    }

    pub fn cycle(&self) -> (Symbol, Symbol) {
        self.cycle
    }

    /// Shortest-prefix form of the same infinite word: a prefix ending in
    /// the cycle's second symbol can be absorbed into the cycle, e.g.
    /// inf,1,0,(1,0)* = inf,(1,0)*.
    pub fn canonical(&self) -> DeltaWord {
        let mut prefix = self.prefix.clone();
        let (mut a, mut b) = self.cycle;
        while prefix.last() == Some(&b) {
            prefix.pop();
            std::mem::swap(&mut a, &mut b);
        }
        DeltaWord {
            prefix,
            cycle: (a, b),
        }
    }

    /// Product of the reflections named by the prefix.
    pub fn eval_matrix(&self) -> Mat2 {
        let mut acc = Mat2::identity();
        for s in &self.prefix {
            acc = acc.mul(&Mat2::reflection(*s));
        }
        acc
    }

    /// The rational the word stands for: the image of the symbol point
    /// complementary to the cycle under the prefix reflections.
    pub fn eval(&self) -> ExtRational {
        let third = ParityClass::third(self.cycle.0, self.cycle.1);
        self.eval_matrix().apply_rational(&third.as_point())
    }
}

impl fmt::Display for DeltaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.prefix {
            write!(f, "{s},")?;
        }
        write!(f, "({},{})*", self.cycle.0, self.cycle.1)
    }
}

impl FromStr for DeltaWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<DeltaWord> {
        let open = s.find('(').ok_or_else(|| Error::Parse {
            position: s.len(),
            message: "missing cycle \"(a,b)*\"".into(),
        })?;
        let tail = &s[open..];
        let inner = tail
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(")*"))
            .ok_or_else(|| Error::Parse {
                position: open,
                message: "cycle must look like \"(a,b)*\"".into(),
            })?;
        let (a, b) = inner.split_once(',').ok_or_else(|| Error::Parse {
            position: open,
            message: "cycle needs two comma-separated symbols".into(),
        })?;
        let cycle = (a.trim().parse()?, b.trim().parse()?);
        let prefix = s[..open]
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Symbol>>>()?;
        DeltaWord::new(prefix, cycle)
    }
}

/// The approximation sets as enumerated by reflection words, with the
/// canonical word and first generation depth of every value.
#[derive(Debug, Clone)]
pub struct DeltaApproximations {
    pub sets: ApproxSets,
    pub words: HashMap<BigRational, (DeltaWord, usize)>,
}

const BEST: usize = 0;
const SIGNED: usize = 1;
fn sonly(c: ParityClass) -> usize {
    2 + c.index()
}
fn single(c: ParityClass) -> usize {
    5 + c.index()
}
fn pair_missing(c: ParityClass) -> usize {
    8 + c.index()
}

fn finite(v: ExtRational) -> BigRational {
    match v {
        ExtRational::Finite(r) => r,
        ExtRational::Infinity => unreachable!("generated approximations are finite"),
    }
}

/// Enumerate the approximation sets by walking the symbol stream.
///
/// At depth m (starting at the first inf symbol) the prefix α₁…α_{m-1}
/// closed with the cycle (α_m, α_{m+1}) yields a two-sided best member, and
/// closed with (α_m, δ) — δ the remaining symbol — a one-sided member; the
/// two values are the endpoints of the depth-m cylinder. The one-sided value
/// is two-sided-only when its witness classes line up (first depth, or
/// α_{m-1} = α_{m+1}); the pair set missing a class γ collects the words
/// cycled with γ itself.
///
/// Expansion stops once the current endpoint denominators certify that no
/// further member can satisfy the limit: any value not seen by depth m has
/// denominator at least the sum of the two endpoint denominators at m. If
/// `m_max` depths do not reach that certificate the enumeration fails with
/// an insufficient-expansion error rather than return a possibly incomplete
/// set.
pub fn approximation_sets(
    stream: &mut DeltaStream,
    limit: &Limit,
    m_max: usize,
) -> Result<DeltaApproximations> {
    let m0 = stream.first_inf()?;
    let mut raw: [BTreeSet<(BigInt, BigInt)>; 11] = std::array::from_fn(|_| BTreeSet::new());
    let mut words: HashMap<BigRational, (DeltaWord, usize)> = HashMap::new();
    let mut matrix = stream.prefix_matrix(m0 - 1)?;
    let mut certified = false;

    fn note_word(
        words: &mut HashMap<BigRational, (DeltaWord, usize)>,
        value: &BigRational,
        word: DeltaWord,
        m: usize,
    ) {
        match words.get(value) {
            None => {
                words.insert(value.clone(), (word, m));
            }
            Some((existing, _)) => {
                debug_assert_eq!(existing, &word, "one value, one canonical word");
            }
        }
    }

    for m in m0..=m_max {
        stream.extend_to(m + 1)?;
        let a = stream.symbols()[m - 1];
        let b = stream.symbols()[m];
        let d = ParityClass::third(a, b);
        let v_s = finite(matrix.apply_rational(&b.as_point()));
        let v_b = finite(matrix.apply_rational(&d.as_point()));
        debug_assert_eq!(parity_of_rational(&v_s), b, "reflections preserve parity");
        debug_assert_eq!(parity_of_rational(&v_b), d, "reflections preserve parity");

        let prefix = stream.symbols()[..m - 1].to_vec();
        let word_b = DeltaWord::new(prefix.clone(), (a, b))?.canonical();
        let word_s = DeltaWord::new(prefix, (a, d))?.canonical();
        note_word(&mut words, &v_b, word_b, m);
        note_word(&mut words, &v_s, word_s, m);

        let key_b = (v_b.denom().clone(), v_b.numer().clone());
        let key_s = (v_s.denom().clone(), v_s.numer().clone());
        raw[BEST].insert(key_b.clone());
        raw[pair_missing(b)].insert(key_b.clone());
        raw[SIGNED].insert(key_s.clone());
        raw[single(b)].insert(key_s.clone());
        raw[pair_missing(d)].insert(key_s.clone());
        let one_sided_only = m == m0 || stream.symbols()[m - 2] == b;
        if one_sided_only {
            raw[sonly(d)].insert(key_s.clone());
        } else {
            raw[BEST].insert(key_s.clone());
        }

        let reach = v_s.denom() + v_b.denom();
        let done = match limit {
            Limit::DenomAtMost(q) => v_s.denom() > q && v_b.denom() > q,
            Limit::Count(n) => raw.iter().all(|set| {
                set.iter()
                    .nth(n.saturating_sub(1))
                    .is_some_and(|(q, _)| q < &reach)
            }),
        };
        if done {
            certified = true;
            break;
        }
        matrix = matrix.mul(&Mat2::reflection(a));
    }

    if !certified {
        return Err(Error::InsufficientExpansion { have: m_max });
    }

    let collect = |set: &BTreeSet<(BigInt, BigInt)>| -> Vec<BigRational> {
        match limit {
            Limit::DenomAtMost(qmax) => set
                .iter()
                .take_while(|(q, _)| q <= qmax)
                .map(|(q, p)| BigRational::new(p.clone(), q.clone()))
                .collect(),
            Limit::Count(n) => set
                .iter()
                .take(*n)
                .map(|(q, p)| BigRational::new(p.clone(), q.clone()))
                .collect(),
        }
    };

    let sets = ApproxSets {
        best: collect(&raw[BEST]),
        signed: collect(&raw[SIGNED]),
        signed_only: std::array::from_fn(|i| collect(&raw[2 + i])),
        best_single: std::array::from_fn(|i| collect(&raw[5 + i])),
        best_pair: std::array::from_fn(|i| collect(&raw[8 + i])),
    };
    Ok(DeltaApproximations { sets, words })
}

/// The two boundary points of the depth-m cylinder: the interval of reals
/// whose first m symbols agree with the stream. They are the images of the
/// two symbol points other than α_m under the depth-(m-1) prefix
/// reflections, and each endpoint lies in the parity class of the symbol
/// point it images (the reflections are trivial mod 2). Returned with the
/// smaller endpoint first and infinity last.
pub fn cylinder(stream: &mut DeltaStream, m: usize) -> Result<(ExtRational, ExtRational)> {
    assert!(m >= 1, "cylinder depth is 1-based");
    stream.extend_to(m)?;
    let alpha = stream.symbols()[m - 1];
    let matrix = stream.prefix_matrix(m - 1)?;
    let mut pts: Vec<ExtRational> = ALL_CLASSES
        .iter()
        .filter(|s| **s != alpha)
        .map(|s| {
            let img = matrix.apply_rational(&s.as_point());
            debug_assert_eq!(img.parity(), *s, "reflections preserve parity");
            img
        })
        .collect();
    pts.sort_by(|x, y| match (x.finite(), y.finite()) {
        (Some(x), Some(y)) => x.cmp(y),
        (Some(_), None) => std::cmp::Ordering::Less,
        (None, Some(_)) => std::cmp::Ordering::Greater,
        (None, None) => std::cmp::Ordering::Equal,
    });
    let hi = pts.pop().expect("two endpoints");
    let lo = pts.pop().expect("two endpoints");
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn surd(a: i64, b: i64, c: i64, d: i64) -> QuadraticSurd {
        QuadraticSurd::new(a.into(), b.into(), c.into(), d.into()).unwrap()
    }

    fn stream_for(x: &QuadraticSurd) -> DeltaStream {
        DeltaStream::from_surd(x, 8).unwrap()
    }

    fn syms(names: &[&str]) -> Vec<Symbol> {
        names.iter().map(|n| n.parse().unwrap()).collect()
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn symbol_streams_match_both_routes() {
        // x = sqrt(2) - 1: period (inf, 1, 0, 1)
        let x = surd(-1, 1, 1, 2);
        let mut s = stream_for(&x);
        s.extend_to(9).unwrap();
        assert_eq!(
            s.symbols(),
            &syms(&["inf", "1", "0", "1", "inf", "1", "0", "1", "inf"])[..]
        );
        assert_eq!(geometric_symbols(&x, 9).unwrap(), s.symbols());
        assert_eq!(s.first_inf().unwrap(), 1);

        // golden ratio: period (0, inf, 1), first inf after one integer letter
        let phi = surd(1, 1, 2, 5);
        let mut s = stream_for(&phi);
        s.extend_to(6).unwrap();
        assert_eq!(s.symbols(), &syms(&["0", "inf", "1", "0", "inf", "1"])[..]);
        assert_eq!(geometric_symbols(&phi, 6).unwrap(), s.symbols());
        assert_eq!(s.first_inf().unwrap(), 2);

        // negative numbers use inverted integer letters
        let neg = surd(0, -1, 1, 2);
        let mut s = stream_for(&neg);
        s.extend_to(7).unwrap();
        assert_eq!(
            s.symbols(),
            &syms(&["1", "0", "inf", "0", "1", "0", "inf"])[..]
        );
        assert_eq!(geometric_symbols(&neg, 7).unwrap(), s.symbols());
        assert_eq!(s.first_inf().unwrap(), 3);
        assert_eq!(s.delta_at(1).unwrap(), ParityClass::Inf);
    }

    #[test]
    fn word_canonical_form_and_eval() {
        let w: DeltaWord = "inf,1,0,(1,0)*".parse().unwrap();
        let c = w.canonical();
        assert_eq!(c.to_string(), "inf,(1,0)*");
        // absorbing does not change the value
        assert_eq!(w.eval(), c.eval());
        assert_eq!(c.eval(), ExtRational::from_fraction(1.into(), 2.into()));
        assert_eq!(
            "(inf,1)*".parse::<DeltaWord>().unwrap().eval(),
            ExtRational::from_int(0)
        );
        assert_eq!(
            "(inf,0)*".parse::<DeltaWord>().unwrap().eval(),
            ExtRational::from_int(1)
        );
        // roundtrip
        let w: DeltaWord = "inf,1,0,(1,inf)*".parse().unwrap();
        assert_eq!(w.to_string(), "inf,1,0,(1,inf)*");
        assert_eq!(w.canonical(), w);
        // adjacency violations are rejected
        assert!("1,1,(0,1)*".parse::<DeltaWord>().is_err());
        assert!("0,(0,1)*".parse::<DeltaWord>().is_err());
        assert!("(1,1)*".parse::<DeltaWord>().is_err());
        assert!("0,1".parse::<DeltaWord>().is_err());
    }

    #[test]
    fn golden_words_for_sqrt2_minus_1() {
        let x = surd(-1, 1, 1, 2);
        let mut s = stream_for(&x);
        let out = approximation_sets(&mut s, &Limit::DenomAtMost(50.into()), 64).unwrap();
        let scan = oracle::brute_sets(&x, 50).unwrap();
        assert_eq!(out.sets, scan, "diff: {:?}", out.sets.diff(&scan));
        let word = |p: i64, q: i64| out.words.get(&rat(p, q)).unwrap().0.to_string();
        assert_eq!(word(0, 1), "(inf,1)*");
        assert_eq!(word(1, 2), "inf,(1,0)*");
        assert_eq!(word(2, 5), "inf,1,0,(1,inf)*");
        assert_eq!(word(5, 12), "inf,1,0,1,inf,(1,0)*");
        assert_eq!(word(12, 29), "inf,1,0,1,inf,1,0,(1,inf)*");
        assert_eq!(word(1, 1), "(inf,0)*");
        assert_eq!(word(1, 3), "inf,1,(0,inf)*");
        assert_eq!(word(3, 7), "inf,1,0,1,(inf,0)*");
        // the same value reached at different depths keeps one word
        assert_eq!(out.words.get(&rat(1, 2)).unwrap().1, 2);
    }

    #[test]
    fn delta_route_matches_scan_on_more_numbers() {
        for x in [
            surd(1, 1, 2, 5),
            surd(0, -1, 1, 2),
            surd(0, 1, 1, 3),
            surd(-5, 1, 10, 85),
        ] {
            let mut s = stream_for(&x);
            let out = approximation_sets(&mut s, &Limit::DenomAtMost(40.into()), 128).unwrap();
            let scan = oracle::brute_sets(&x, 40).unwrap();
            assert_eq!(out.sets, scan, "x = {x}, diff: {:?}", out.sets.diff(&scan));
        }
    }

    #[test]
    fn count_limit_certifies_when_every_class_occurs() {
        // x = (-5+sqrt(85))/10 = [0; 2,2,1,2,2,1,...] has one-sided-only
        // members witnessed from all three classes early on
        let x = surd(-5, 1, 10, 85);
        let mut s = stream_for(&x);
        let out = approximation_sets(&mut s, &Limit::Count(1), 64).unwrap();
        let mut scan = oracle::brute_sets(&x, 20).unwrap();
        scan.truncate_to_count(1);
        assert_eq!(out.sets, scan, "diff: {:?}", out.sets.diff(&scan));
        assert_eq!(
            out.sets.signed_only[ParityClass::One.index()],
            vec![rat(5, 12)]
        );

        // sqrt(2)-1 never produces a witness of class 1, so a count limit
        // cannot be certified no matter how deep the expansion goes
        let x = surd(-1, 1, 1, 2);
        let mut s = stream_for(&x);
        let err = approximation_sets(&mut s, &Limit::Count(1), 64).unwrap_err();
        assert_eq!(err, Error::InsufficientExpansion { have: 64 });
    }

    #[test]
    fn insufficient_expansion_is_reported() {
        let x = surd(-1, 1, 1, 2);
        let mut s = stream_for(&x);
        let err = approximation_sets(&mut s, &Limit::DenomAtMost(1_000_000.into()), 4).unwrap_err();
        assert_eq!(err, Error::InsufficientExpansion { have: 4 });
    }

    #[test]
    fn cylinders_follow_the_pell_recursion() {
        // Pell numbers P_{-1} = 1, P_0 = 0, P_{n} = 2 P_{n-1} + P_{n-2}
        let pell: Vec<BigInt> = {
            let mut v = vec![BigInt::one(), BigInt::zero()];
            while v.len() < 12 {
                let n = v.len();
                v.push(2 * &v[n - 1] + &v[n - 2]);
            }
            v
        };
        let p = |i: i64| pell[(i + 1) as usize].clone(); // p(i) = P_i
        let x = surd(-1, 1, 1, 2);
        let mut s = stream_for(&x);

        // one full symbol period of reflections multiplies out to the Pell
        // matrix [[P_{2k-1}, P_{2k}], [P_{2k}, P_{2k+1}]]
        let period = Mat2::reflection(ParityClass::Inf)
            .mul(&Mat2::reflection(ParityClass::One))
            .mul(&Mat2::reflection(ParityClass::Zero))
            .mul(&Mat2::reflection(ParityClass::One));
        for k in 1..=4i64 {
            let expect = Mat2::new(p(2 * k - 1), p(2 * k), p(2 * k), p(2 * k + 1));
            assert!(period.pow(k as u64).proj_eq(&expect), "k = {k}");
        }

        let frac = |a: BigInt, b: BigInt| ExtRational::from_fraction(a, b);
        for k in 0..2i64 {
            let m = |j: i64| (4 * k + j) as usize;
            let (lo, hi) = cylinder(&mut s, m(1)).unwrap();
            assert_eq!(lo, frac(p(2 * k), p(2 * k + 1)));
            assert_eq!(hi, frac(p(2 * k - 1) + p(2 * k), p(2 * k) + p(2 * k + 1)));
            let (lo, hi) = cylinder(&mut s, m(2)).unwrap();
            assert_eq!(lo, frac(p(2 * k), p(2 * k + 1)));
            assert_eq!(hi, frac(p(2 * k + 1), p(2 * k + 2)));
            let (lo, hi) = cylinder(&mut s, m(3)).unwrap();
            assert_eq!(
                lo,
                frac(p(2 * k) + p(2 * k + 1), p(2 * k + 1) + p(2 * k + 2))
            );
            assert_eq!(hi, frac(p(2 * k + 1), p(2 * k + 2)));
            let (lo, hi) = cylinder(&mut s, m(4)).unwrap();
            assert_eq!(lo, frac(p(2 * k + 2), p(2 * k + 3)));
            assert_eq!(hi, frac(p(2 * k + 1), p(2 * k + 2)));
        }

        // a cylinder of a number above 1 keeps an infinite endpoint, last
        let phi = surd(1, 1, 2, 5);
        let mut s = stream_for(&phi);
        let (lo, hi) = cylinder(&mut s, 1).unwrap();
        assert_eq!(lo, ExtRational::from_int(1));
        assert_eq!(hi, ExtRational::Infinity);
        let (lo, hi) = cylinder(&mut s, 2).unwrap();
        assert_eq!(lo, ExtRational::from_int(1));
        assert_eq!(hi, ExtRational::from_int(2));
    }
}
