//! Serializable output documents and the JSON/CSV writers.
//!
//! Every JSON document carries `"schema": 1` so downstream consumers can
//! detect layout changes. CSV output always starts with a header line, even
//! when there are no data rows.

use std::collections::HashMap;
use std::io::{self, Write};

use num::BigRational;
use parity_cf::class::ALL_CLASSES;
use parity_cf::{
    parity_of_rational, ApproxKind, ApproxRecord, ApproxSets, ClassPair, DeltaWord, ParityClass,
};
use serde::Serialize;

/// One member of an approximation set, with all membership verdicts.
#[derive(Debug, Serialize)]
pub struct Row {
    pub value: String,
    pub p: String,
    pub q: String,
    /// Parity class of the fraction: `0`, `1` or `inf`.
    pub parity: String,
    /// `principal` (a convergent) or `intermediate`, when known.
    pub kind: Option<String>,
    /// Expansion block the member comes from.
    pub n: Option<usize>,
    /// Position inside the block, for intermediates.
    pub k: Option<String>,
    /// Member of the two-sided best approximation set.
    pub in_b: bool,
    /// Member of the one-sided (signed) best approximation set.
    pub in_s: bool,
    /// For one-sided-only members, the class of the witness that keeps
    /// them out of the two-sided set.
    pub s_class: Option<String>,
    pub b0: bool,
    pub b1: bool,
    pub binf: bool,
    pub b01: bool,
    pub b0inf: bool,
    pub b1inf: bool,
    /// Eventually periodic reflection word evaluating to the value.
    pub delta_word: Option<String>,
    /// Depth at which the reflection route first reaches the value.
    pub m: Option<usize>,
}

pub const ROW_FIELDS: [&str; 18] = [
    "value",
    "p",
    "q",
    "parity",
    "kind",
    "n",
    "k",
    "in_b",
    "in_s",
    "s_class",
    "b0",
    "b1",
    "binf",
    "b01",
    "b0inf",
    "b1inf",
    "delta_word",
    "m",
];

/// Top-level JSON document for the `best` and `signed` subcommands.
#[derive(Debug, Serialize)]
pub struct ApproxDoc {
    pub schema: u32,
    pub input: String,
    pub value_decimal: String,
    pub set: String,
    pub route: String,
    pub limit: String,
    pub count: usize,
    pub rows: Vec<Row>,
}

/// One symbol of the reflection stream, with optional interval endpoints.
#[derive(Debug, Serialize)]
pub struct SymbolRow {
    pub m: usize,
    pub alpha: String,
    pub delta: String,
    pub lo: Option<String>,
    pub hi: Option<String>,
}

pub const SYMBOL_FIELDS: [&str; 5] = ["m", "alpha", "delta", "lo", "hi"];

#[derive(Debug, Serialize)]
pub struct PeriodInfo {
    pub start: usize,
    pub length: usize,
}

#[derive(Debug, Serialize)]
pub struct DeltaDoc {
    pub schema: u32,
    pub input: String,
    /// Depth of the first `inf` symbol (one past the integer-part letters).
    pub first_inf: usize,
    /// Detected period of the underlying expansion terms, if any.
    pub term_period: Option<PeriodInfo>,
    pub symbols: Vec<SymbolRow>,
}

/// One forward step of an interval map.
#[derive(Debug, Serialize)]
pub struct StepRow {
    pub i: usize,
    pub input: String,
    pub input_decimal: String,
    pub output: String,
    pub output_decimal: String,
    /// Integer matrix carrying the input to the output.
    pub branch: String,
    pub symbols_consumed: usize,
    /// Relabeling applied to the remaining symbol stream.
    pub relabel: String,
}

pub const STEP_FIELDS: [&str; 8] = [
    "i",
    "input",
    "input_decimal",
    "output",
    "output_decimal",
    "branch",
    "symbols_consumed",
    "relabel",
];

#[derive(Debug, Serialize)]
pub struct MapDoc {
    pub schema: u32,
    pub input: String,
    pub map: String,
    pub rows: Vec<StepRow>,
}

/// One member of an inverse orbit.
#[derive(Debug, Serialize)]
pub struct OrbitRow {
    pub i: usize,
    pub value: String,
    pub parity: String,
}

pub const ORBIT_FIELDS: [&str; 3] = ["i", "value", "parity"];

#[derive(Debug, Serialize)]
pub struct RecoverDoc {
    pub schema: u32,
    pub input: String,
    pub anchor: String,
    pub rows: Vec<OrbitRow>,
}

/// Build the display rows for a chosen approximation set.
///
/// `sets` answers every membership question; `records`, when available,
/// adds how each member arises from the expansion; `words`, when the
/// reflection route ran, adds the word and depth of first contact.
pub fn make_rows(
    display: &[BigRational],
    sets: &ApproxSets,
    records: Option<&HashMap<BigRational, ApproxRecord>>,
    words: Option<&HashMap<BigRational, (DeltaWord, usize)>>,
) -> Vec<Row> {
    display
        .iter()
        .map(|v| {
            let rec = records.and_then(|m| m.get(v));
            let (kind, n, k) = match rec.map(|r| &r.kind) {
                Some(ApproxKind::Principal { n }) => (Some("principal".into()), Some(*n), None),
                Some(ApproxKind::Intermediate { n, k }) => {
                    (Some("intermediate".into()), Some(*n), Some(k.to_string()))
                }
                None => (None, None, None),
            };
            // Pair sets in b01/b0inf/b1inf order, i.e. indexed by missing
            // class inf, 1, 0.
            let pair_classes = [
                ClassPair::new(ParityClass::Zero, ParityClass::One),
                ClassPair::new(ParityClass::Zero, ParityClass::Inf),
                ClassPair::new(ParityClass::One, ParityClass::Inf),
            ];
            // Records carry exact membership verdicts; the bundle is the
            // fallback, but under a count limit its components are
            // truncated snapshots and may under-report membership.
            let (in_b, in_s, s_class, singles, pairs) = match rec {
                Some(r) => (
                    r.in_best,
                    true,
                    r.witness.map(|c| c.to_string()),
                    ALL_CLASSES.map(|c| r.in_single(c)),
                    pair_classes.map(|pair| r.in_pair(pair)),
                ),
                None => (
                    sets.best.contains(v),
                    sets.signed.contains(v),
                    ALL_CLASSES
                        .iter()
                        .find(|c| sets.signed_only[c.index()].contains(v))
                        .map(|c| c.to_string()),
                    ALL_CLASSES.map(|c| sets.single_set(c).contains(v)),
                    pair_classes.map(|pair| sets.pair_set(pair).contains(v)),
                ),
            };
            let word = words.and_then(|m| m.get(v));
            Row {
                value: v.to_string(),
                p: v.numer().to_string(),
                q: v.denom().to_string(),
                parity: parity_of_rational(v).to_string(),
                kind,
                n,
                k,
                in_b,
                in_s,
                s_class,
                b0: singles[0],
                b1: singles[1],
                binf: singles[2],
                b01: pairs[0],
                b0inf: pairs[1],
                b1inf: pairs[2],
                delta_word: word.map(|(w, _)| w.to_string()),
                m: word.map(|(_, m)| *m),
            }
        })
        .collect()
}

/// Pretty-print a document as JSON on stdout.
pub fn print_json<T: Serialize>(doc: &T) -> io::Result<()> {
    let text = serde_json::to_string_pretty(doc).expect("documents serialize");
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.write_all(b"\n")?;
    out.flush()
}

/// Print rows as CSV on stdout, header first.
pub fn print_csv<T: Serialize>(header: &[&str], rows: &[T]) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(io::stdout().lock());
    w.write_record(header).map_err(io::Error::other)?;
    for row in rows {
        w.serialize(row).map_err(io::Error::other)?;
    }
    w.flush()?;
    Ok(())
}
