//! `parity-cf`: parity-constrained best rational approximation of quadratic
//! irrationals.
//!
//! The library computes the same approximation sets by independent routes
//! (continued-fraction expansion, reflection symbol stream, brute-force
//! scan); the CLI exposes each route and can run them side by side as a
//! consistency check.
//!
//! Exit codes: 0 success, 2 bad input or usage, 3 certified precision or
//! expansion depth exhausted, 4 cross-check mismatch, 5 I/O failure.
//!
//! Setting `PARITY_CF_FAULT` (any value) corrupts one route's output before
//! the `--route all` comparison; tests use it to prove that a disagreement
//! between routes is fatal rather than silently ignored.

mod input;
mod report;
mod svg;

use std::collections::HashMap;
use std::fmt;
use std::io::{self, Write};
use std::process;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{BigInt, BigRational, One};
use parity_cf::rcf::RcfStream;
use parity_cf::{delta, maps, oracle, parity, sample};
use parity_cf::{
    ApproxRecord, ApproxSets, CfMapKind, ClassFilter, DeltaStream, Error, Limit, QuadraticSurd,
};

use input::NumberInput;
use report::{ApproxDoc, DeltaDoc, MapDoc, OrbitRow, PeriodInfo, RecoverDoc, StepRow, SymbolRow};

/// Deepest symbol prefix the reflection route will build for a denominator
/// bound; denominators grow exponentially in the depth, so this covers any
/// practical bound.
const DELTA_M_MAX: usize = 4096;

#[derive(Parser)]
#[command(
    name = "parity-cf",
    version,
    about = "Parity-constrained best rational approximation of quadratic irrationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List two-sided best approximations, optionally class-restricted.
    Best(ApproxArgs),
    /// List one-sided best approximations; with --class, the members kept
    /// out of the two-sided set by a witness of that class.
    Signed(ApproxArgs),
    /// Show the reflection symbol stream and the intervals it cuts.
    Delta(DeltaArgs),
    /// Iterate one of the six interval maps, or recover class-restricted
    /// approximations from an inverse orbit.
    Maps(MapsArgs),
    /// Cross-verify every computation route on random inputs.
    OracleCheck(OracleCheckArgs),
    /// Render the nested intervals as a half-plane picture in SVG.
    Svg(SvgArgs),
}

#[derive(Args)]
struct ApproxArgs {
    /// Number to approximate: `sqrt(2)`, `-1+sqrt(2)`, `(1+sqrt(5))/2`,
    /// `2*sqrt(3)/7`, or a decimal literal like `0.4142135623`.
    #[arg(allow_hyphen_values = true)]
    value: String,
    /// Restrict to one parity class (`0`, `1`, `inf`) or two (`0,inf`).
    #[arg(long)]
    class: Option<String>,
    /// `q:Q` for all members with denominator at most Q, or `n:N` for the
    /// first N members of the requested set.
    #[arg(long, default_value = "n:10")]
    limit: String,
    /// Algorithm that computes the answer.
    #[arg(long, value_enum, default_value_t = Route::Rcf)]
    route: Route,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Route {
    /// Continued-fraction expansion with certified stopping.
    Rcf,
    /// Reflection symbol stream and its nested intervals.
    Delta,
    /// Brute-force scan over all fractions up to the bound.
    Oracle,
    /// Run every applicable route and require agreement.
    All,
}

impl Route {
    fn name(self) -> &'static str {
        match self {
            Route::Rcf => "rcf",
            Route::Delta => "delta",
            Route::Oracle => "oracle",
            Route::All => "all",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct DeltaArgs {
    /// Number to expand (same forms as `best`).
    #[arg(allow_hyphen_values = true)]
    value: String,
    /// How many symbols to show.
    #[arg(long, default_value_t = 16)]
    terms: usize,
    /// Include the interval endpoints at each depth.
    #[arg(long)]
    cylinders: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct MapsArgs {
    /// Number in the open unit interval, as an exact expression.
    #[arg(allow_hyphen_values = true)]
    value: String,
    /// Map to iterate forward: farey, gauss, by-excess, even, odd, odd-odd.
    #[arg(long)]
    map: Option<String>,
    /// Inverse orbit anchor: `even` or `odd-odd`.
    #[arg(long)]
    recover: Option<String>,
    /// Number of forward steps, or the number of recovered members.
    #[arg(long, default_value_t = 10)]
    steps: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct OracleCheckArgs {
    /// Number of random quadratic irrationals to test.
    #[arg(long, default_value_t = 8)]
    count: usize,
    /// Denominator bound used by every route.
    #[arg(long, default_value_t = 200)]
    qmax: u32,
    /// RNG seed; defaults to $PARITY_CF_SEED, then 1.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct SvgArgs {
    /// Number to picture (same forms as `best`).
    #[arg(allow_hyphen_values = true)]
    value: String,
    /// Number of nested intervals to draw.
    #[arg(long, default_value_t = 12)]
    terms: usize,
    /// Output path; `-` writes to stdout.
    #[arg(long)]
    out: String,
}

/// Anything that stops the program, with its exit code.
#[derive(Debug)]
enum Failure {
    Compute(Error),
    Usage(String),
    /// Certified precision or expansion depth ran out (exit 3), with advice.
    Exhausted(String),
    Mismatch(String),
    Io(io::Error),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Compute(Error::PrecisionExhausted { .. })
            | Failure::Compute(Error::InsufficientExpansion { .. }) => 3,
            Failure::Compute(Error::CheckFailed(_)) => 4,
            Failure::Compute(_) => 2,
            Failure::Exhausted(_) => 3,
            Failure::Mismatch(_) => 4,
            Failure::Io(_) => 5,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Compute(e) => write!(f, "{e}"),
            Failure::Usage(m) | Failure::Exhausted(m) | Failure::Mismatch(m) => write!(f, "{m}"),
            Failure::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Compute(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e)
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(f) = run(cli) {
        eprintln!("error: {f}");
        process::exit(f.exit_code());
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Best(args) => run_approx(SetChoice::Best, args),
        Command::Signed(args) => run_approx(SetChoice::Signed, args),
        Command::Delta(args) => run_delta(args),
        Command::Maps(args) => run_maps(args),
        Command::OracleCheck(args) => run_oracle_check(args),
        Command::Svg(args) => run_svg(args),
    }
}

fn parse_limit(s: &str) -> Result<Limit, Failure> {
    let bad = || {
        Failure::Usage(format!(
            "invalid --limit {s:?}: expected q:<denominator bound> or n:<count>"
        ))
    };
    let (tag, num) = s.split_once(':').ok_or_else(bad)?;
    match tag.trim() {
        "q" => {
            let q: BigInt = num.trim().parse().map_err(|_| bad())?;
            if q < BigInt::from(0) {
                return Err(bad());
            }
            Ok(Limit::DenomAtMost(q))
        }
        "n" => {
            let n: usize = num.trim().parse().map_err(|_| bad())?;
            Ok(Limit::Count(n))
        }
        _ => Err(bad()),
    }
}

fn limit_label(limit: &Limit) -> String {
    match limit {
        Limit::DenomAtMost(q) => format!("q:{q}"),
        Limit::Count(n) => format!("n:{n}"),
    }
}

fn fresh_rcf(number: &NumberInput) -> Result<RcfStream, Error> {
    match number {
        NumberInput::Exact(x) => RcfStream::from_surd(x, 8),
        NumberInput::Decimal(s) => RcfStream::from_decimal_str(s, 8),
    }
}

fn fresh_delta(number: &NumberInput) -> Result<DeltaStream, Error> {
    Ok(DeltaStream::from_rcf(fresh_rcf(number)?))
}

fn exact_only<'a>(number: &'a NumberInput, what: &str) -> Result<&'a QuadraticSurd, Failure> {
    match number {
        NumberInput::Exact(x) => Ok(x),
        NumberInput::Decimal(_) => Err(Failure::Usage(format!(
            "{what} needs an exact quadratic input, not a decimal literal"
        ))),
    }
}

/// Reflection route. A count limit is only certifiable once every set has
/// reached the count inside the built prefix; sets whose witness class the
/// stream never produces stay short forever, so retries are capped.
fn delta_route(number: &NumberInput, limit: &Limit) -> Result<delta::DeltaApproximations, Error> {
    let mut stream = fresh_delta(number)?;
    match limit {
        Limit::DenomAtMost(_) => delta::approximation_sets(&mut stream, limit, DELTA_M_MAX),
        Limit::Count(_) => {
            let mut m_max = 64;
            loop {
                match delta::approximation_sets(&mut stream, limit, m_max) {
                    Err(Error::InsufficientExpansion { .. }) if m_max < 2048 => m_max *= 2,
                    other => return other,
                }
            }
        }
    }
}

/// Largest denominator a brute-force scan will be asked to reach when the
/// bound is merely implied by a count limit; the scan is quadratic in the
/// bound, so implied bounds beyond this are refused or skipped.
const SCAN_FEASIBLE_Q: u32 = 10_000;

/// The component of the bundle that `best`/`signed` with this class filter
/// displays.
fn select_display<'a>(
    sets: &'a ApproxSets,
    which: &SetChoice,
    class: &Option<ClassFilter>,
) -> &'a Vec<BigRational> {
    match (which, class) {
        (SetChoice::Best, None) => &sets.best,
        (SetChoice::Best, Some(ClassFilter::Single(c))) => sets.single_set(*c),
        (SetChoice::Best, Some(ClassFilter::Pair(p))) => sets.pair_set(*p),
        (SetChoice::Signed, None) => &sets.signed,
        (SetChoice::Signed, Some(ClassFilter::Single(c))) => &sets.signed_only[c.index()],
        (SetChoice::Signed, Some(ClassFilter::Pair(_))) => unreachable!("rejected before routing"),
    }
}

/// Largest denominator among the displayed values.
fn display_bound(display: &[BigRational]) -> BigInt {
    display
        .iter()
        .map(|v| v.denom().clone())
        .max()
        .unwrap_or_else(BigInt::one)
}

/// How each displayed value arises from the expansion (convergent or
/// intermediate, block, position). Enrichment only: absent when the stream
/// cannot be replayed far enough.
fn record_lookup(
    number: &NumberInput,
    display: &[BigRational],
) -> Option<HashMap<BigRational, ApproxRecord>> {
    let maxq = display.iter().map(|v| v.denom()).max()?.clone();
    let mut stream = fresh_rcf(number).ok()?;
    let records = parity::collect_records(&mut stream, &Limit::DenomAtMost(maxq), None).ok()?;
    Some(records.into_iter().map(|r| (r.value.clone(), r)).collect())
}

enum SetChoice {
    Best,
    Signed,
}

fn run_approx(which: SetChoice, args: ApproxArgs) -> Result<(), Failure> {
    let number = input::parse_number(&args.value)?;
    let limit = parse_limit(&args.limit)?;
    let class: Option<ClassFilter> = match &args.class {
        None => None,
        Some(s) => Some(
            s.parse::<ClassFilter>()
                .map_err(|e| Failure::Usage(format!("invalid --class {s:?}: {e}")))?,
        ),
    };
    if matches!(
        (&which, &class),
        (SetChoice::Signed, Some(ClassFilter::Pair(_)))
    ) {
        return Err(Failure::Usage(
            "one-sided-only sets are split by a single witness class; pass --class 0, 1 or inf"
                .into(),
        ));
    }
    let set_label = match (&which, &class) {
        (SetChoice::Best, None) => "best".to_string(),
        (SetChoice::Best, Some(f)) => format!("best[{f}]"),
        (SetChoice::Signed, None) => "signed".to_string(),
        (SetChoice::Signed, Some(f)) => format!("signed-only[{f}]"),
    };

    // A zero bound or zero count asks for nothing; print the empty table
    // without running any route.
    let empty_request = match &limit {
        Limit::DenomAtMost(q) => *q < BigInt::one(),
        Limit::Count(n) => *n == 0,
    };

    let (sets, words) = if empty_request {
        (ApproxSets::default(), None)
    } else {
        match args.route {
            Route::Rcf => {
                let mut stream = fresh_rcf(&number)?;
                (parity::route_sets(&mut stream, &limit)?, None)
            }
            Route::Delta => {
                let d = match delta_route(&number, &limit) {
                    Err(e @ Error::InsufficientExpansion { .. })
                        if matches!(limit, Limit::Count(_)) =>
                    {
                        return Err(Failure::Exhausted(format!(
                            "{e}; a count is only certifiable once every parity class has \
                         occurred as a witness, which may never happen — use a q:<bound> \
                         limit or --route rcf instead"
                        )))
                    }
                    other => other?,
                };
                (d.sets, Some(d.words))
            }
            Route::Oracle => {
                let x = exact_only(&number, "the scan route")?;
                let sets = match &limit {
                    Limit::DenomAtMost(q) => oracle::brute_sets(x, q.clone())?,
                    Limit::Count(n) => {
                        // A scan needs a denominator bound; take it from the
                        // requested set's n-th member via the expansion route.
                        let mut stream = RcfStream::from_surd(x, 8)?;
                        let reference = parity::route_sets(&mut stream, &limit)?;
                        let qbound = display_bound(select_display(&reference, &which, &class));
                        if qbound > BigInt::from(SCAN_FEASIBLE_Q) {
                            return Err(Failure::Usage(format!(
                                "the first {n} members of {set_label} reach denominator \
                             {qbound}, too far for a brute-force scan — use --route rcf \
                             or an explicit q:<bound>"
                            )));
                        }
                        let mut sets = oracle::brute_sets(x, qbound)?;
                        sets.truncate_to_count(*n);
                        sets
                    }
                };
                (sets, None)
            }
            Route::All => {
                let mut stream = fresh_rcf(&number)?;
                let reference = parity::route_sets(&mut stream, &limit)?;
                // Cross-checks run under a denominator bound, where every route
                // enumerates a complete, directly comparable region. A count
                // limit implies the bound reached by the displayed set.
                let (qbound, mut check) = match &limit {
                    Limit::DenomAtMost(q) => (q.clone(), reference.clone()),
                    Limit::Count(_) => {
                        let qbound = display_bound(select_display(&reference, &which, &class));
                        let mut s = fresh_rcf(&number)?;
                        let check =
                            parity::route_sets(&mut s, &Limit::DenomAtMost(qbound.clone()))?;
                        (qbound, check)
                    }
                };
                // Test hook: a corrupted route must surface as a fatal
                // cross-check failure, never as a silent pass.
                if std::env::var_os("PARITY_CF_FAULT").is_some() {
                    check.best.pop();
                }
                let d = delta_route(&number, &Limit::DenomAtMost(qbound.clone()))?;
                if let Some(diff) = check.diff(&d.sets) {
                    return Err(Failure::Mismatch(format!(
                        "expansion and reflection routes disagree: {diff}"
                    )));
                }
                if let NumberInput::Exact(x) = &number {
                    if qbound <= BigInt::from(SCAN_FEASIBLE_Q) {
                        let scan = oracle::brute_sets(x, qbound.clone())?;
                        if let Some(diff) = check.diff(&scan) {
                            return Err(Failure::Mismatch(format!(
                                "expansion and scan routes disagree: {diff}"
                            )));
                        }
                    } else {
                        eprintln!(
                            "note: scan cross-check skipped (bound q:{qbound} is too large \
                         for a brute-force scan); expansion and reflection were compared"
                        );
                    }
                }
                (reference, Some(d.words))
            }
        }
    };

    let display = select_display(&sets, &which, &class);
    let records = record_lookup(&number, display);
    let rows = report::make_rows(display, &sets, records.as_ref(), words.as_ref());

    match args.format {
        Format::Json => {
            let value_decimal = match &number {
                NumberInput::Exact(x) => x.to_decimal(30),
                NumberInput::Decimal(s) => s.clone(),
            };
            report::print_json(&ApproxDoc {
                schema: 1,
                input: args.value.clone(),
                value_decimal,
                set: set_label,
                route: args.route.name().to_string(),
                limit: limit_label(&limit),
                count: rows.len(),
                rows,
            })?;
        }
        Format::Csv => report::print_csv(&report::ROW_FIELDS, &rows)?,
    }
    Ok(())
}

fn run_delta(args: DeltaArgs) -> Result<(), Failure> {
    let number = input::parse_number(&args.value)?;
    let mut stream = fresh_delta(&number)?;
    let mut rows = Vec::with_capacity(args.terms);
    for m in 1..=args.terms {
        let alpha = stream.symbol(m)?;
        let d = stream.delta_at(m)?;
        let (lo, hi) = if args.cylinders {
            let (lo, hi) = delta::cylinder(&mut stream, m)?;
            (Some(lo.to_string()), Some(hi.to_string()))
        } else {
            (None, None)
        };
        rows.push(SymbolRow {
            m,
            alpha: alpha.to_string(),
            delta: d.to_string(),
            lo,
            hi,
        });
    }
    match args.format {
        Format::Json => {
            let first_inf = stream.first_inf()?;
            let term_period = stream
                .period()
                .map(|(start, length)| PeriodInfo { start, length });
            report::print_json(&DeltaDoc {
                schema: 1,
                input: args.value,
                first_inf,
                term_period,
                symbols: rows,
            })?;
        }
        Format::Csv => report::print_csv(&report::SYMBOL_FIELDS, &rows)?,
    }
    Ok(())
}

fn run_maps(args: MapsArgs) -> Result<(), Failure> {
    let number = input::parse_number(&args.value)?;
    let x = exact_only(&number, "interval maps")?;
    match (&args.map, &args.recover) {
        (None, None) => Err(Failure::Usage(
            "pass --map <kind> to iterate forward or --recover <anchor> for an inverse orbit"
                .into(),
        )),
        (Some(kind_text), None) => {
            let kind: CfMapKind = kind_text
                .parse()
                .map_err(|e| Failure::Usage(format!("invalid --map {kind_text:?}: {e}")))?;
            let steps = maps::orbit(kind, x, args.steps)?;
            let rows: Vec<StepRow> = steps
                .iter()
                .enumerate()
                .map(|(i, s)| StepRow {
                    i: i + 1,
                    input: s.input.to_string(),
                    input_decimal: s.input.to_decimal(12),
                    output: s.output.to_string(),
                    output_decimal: s.output.to_decimal(12),
                    branch: s.branch.to_string(),
                    symbols_consumed: s.symbols_consumed,
                    relabel: s.relabel.to_string(),
                })
                .collect();
            match args.format {
                Format::Json => report::print_json(&MapDoc {
                    schema: 1,
                    input: args.value,
                    map: kind.to_string(),
                    rows,
                })?,
                Format::Csv => report::print_csv(&report::STEP_FIELDS, &rows)?,
            }
            Ok(())
        }
        (map_flag, Some(anchor)) => {
            let anchor_kind = match anchor.trim().to_ascii_lowercase().as_str() {
                "even" => CfMapKind::Even,
                "odd-odd" | "oddodd" => CfMapKind::OddOdd,
                _ => {
                    return Err(Failure::Usage(format!(
                        "invalid --recover {anchor:?}: expected even or odd-odd"
                    )))
                }
            };
            // --map may restate the anchor's own map, nothing else.
            if let Some(kind_text) = map_flag {
                let kind: CfMapKind = kind_text
                    .parse()
                    .map_err(|e| Failure::Usage(format!("invalid --map {kind_text:?}: {e}")))?;
                if kind != anchor_kind {
                    return Err(Failure::Usage(format!(
                        "--map {kind} conflicts with --recover {anchor_kind}; the \
                         inverse orbit is anchored to its own map"
                    )));
                }
            }
            let values = match anchor_kind {
                CfMapKind::Even => maps::even_inverse_orbit(x, args.steps)?,
                _ => maps::oddodd_inverse_orbit(x, args.steps)?,
            };
            let rows: Vec<OrbitRow> = values
                .iter()
                .enumerate()
                .map(|(i, v)| OrbitRow {
                    i,
                    value: v.to_string(),
                    parity: parity_cf::parity_of_rational(v).to_string(),
                })
                .collect();
            match args.format {
                Format::Json => report::print_json(&RecoverDoc {
                    schema: 1,
                    input: args.value,
                    anchor: anchor_kind.to_string(),
                    rows,
                })?,
                Format::Csv => report::print_csv(&report::ORBIT_FIELDS, &rows)?,
            }
            Ok(())
        }
    }
}

fn run_oracle_check(args: OracleCheckArgs) -> Result<(), Failure> {
    if args.count == 0 || args.qmax == 0 {
        return Err(Failure::Usage(
            "--count and --qmax must be at least 1".into(),
        ));
    }
    let seed = args.seed.unwrap_or_else(|| {
        std::env::var("PARITY_CF_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(1)
    });
    let qmax = BigInt::from(args.qmax);
    let limit = Limit::DenomAtMost(qmax.clone());
    let surds = sample::sample_surds(seed, args.count);
    let mut out = io::stdout().lock();
    writeln!(
        out,
        "cross-checking {} random quadratic irrationals at q <= {} (seed {seed})",
        args.count, args.qmax
    )?;
    let mut failures = Vec::new();
    for x in &surds {
        let mut stream = RcfStream::from_surd(x, 8)?;
        let reference = parity::route_sets(&mut stream, &limit)?;
        let mut dstream = DeltaStream::from_surd(x, 8)?;
        let reflection = delta::approximation_sets(&mut dstream, &limit, DELTA_M_MAX)?;
        let scan = oracle::brute_sets(x, qmax.clone())?;
        let geometry = oracle::geometric_sets(x, qmax.clone())?;
        let mut verdict = "ok";
        for (name, other) in [
            ("reflection", &reflection.sets),
            ("scan", &scan),
            ("geometry", &geometry),
        ] {
            if let Some(diff) = reference.diff(other) {
                failures.push(format!("{x}: expansion vs {name}: {diff}"));
                verdict = "MISMATCH";
            }
        }
        writeln!(
            out,
            "{verdict:<8} {x}   best {} / signed {}",
            reference.best.len(),
            reference.signed.len()
        )?;
    }
    if failures.is_empty() {
        writeln!(out, "all routes agree on {} inputs", surds.len())?;
        Ok(())
    } else {
        Err(Failure::Mismatch(failures.join("; ")))
    }
}

fn run_svg(args: SvgArgs) -> Result<(), Failure> {
    if args.terms == 0 {
        return Err(Failure::Usage("--terms must be at least 1".into()));
    }
    let number = input::parse_number(&args.value)?;
    let mut stream = fresh_delta(&number)?;
    let x_pos = number.position_hint();
    let label = match &number {
        NumberInput::Exact(x) => x.to_decimal(12),
        NumberInput::Decimal(s) => s.clone(),
    };
    let doc = svg::render(&x_pos, &label, &mut stream, args.terms)?;
    if args.out == "-" {
        let mut out = io::stdout().lock();
        out.write_all(doc.as_bytes())?;
        out.flush()?;
    } else {
        std::fs::write(&args.out, doc.as_bytes())?;
    }
    Ok(())
}
