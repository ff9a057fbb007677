//! Benchmark bodies for the `routes` bench target.
//!
//! Keeping the bodies in the library (rather than in the bench binary)
//! lets `cargo check` and clippy see them without pulling in the
//! criterion harness.

use std::hint::black_box;

use criterion::Criterion;
use num::BigInt;
use parity_cf::rcf::RcfStream;
use parity_cf::{delta, maps, oracle, parity};
use parity_cf::{CfMapKind, DeltaStream, Limit, QuadraticSurd};

/// sqrt(2) - 1: period-one expansion with the densest approximation sets.
fn silver() -> QuadraticSurd {
    QuadraticSurd::new(
        BigInt::from(-1),
        BigInt::from(1),
        BigInt::from(1),
        BigInt::from(2),
    )
    .expect("valid surd")
}

/// (3 + sqrt(61)) / 7: a longer period exercising the general step logic.
fn generic() -> QuadraticSurd {
    QuadraticSurd::new(
        BigInt::from(3),
        BigInt::from(1),
        BigInt::from(7),
        BigInt::from(61),
    )
    .expect("valid surd")
}

pub fn benchmarks(c: &mut Criterion) {
    let silver = silver();
    let generic = generic();
    let bound = Limit::DenomAtMost(BigInt::from(1_000_000));

    c.bench_function("continued fraction, 2000 terms", |b| {
        b.iter(|| {
            let mut s = RcfStream::from_surd(&generic, 8).expect("stream");
            s.extend_to(2000).expect("expansion");
            black_box(s.terms().len())
        })
    });

    c.bench_function("expansion route to q = 10^6", |b| {
        b.iter(|| {
            let mut s = RcfStream::from_surd(&silver, 8).expect("stream");
            parity::route_sets(&mut s, &bound).expect("sets")
        })
    });

    c.bench_function("reflection route to q = 10^6", |b| {
        b.iter(|| {
            let mut d = DeltaStream::from_surd(&silver, 8).expect("stream");
            delta::approximation_sets(&mut d, &bound, 4096).expect("sets")
        })
    });

    c.bench_function("brute-force scan to q = 400", |b| {
        b.iter(|| oracle::brute_sets(&silver, 400).expect("sets"))
    });

    c.bench_function("gauss orbit, 1000 steps", |b| {
        b.iter(|| maps::orbit(CfMapKind::Gauss, &silver, 1000).expect("orbit"))
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bench_inputs_are_valid_quadratic_irrationals() {
        assert!(silver().to_decimal(6).starts_with("0.414213"));
        assert!(generic().to_decimal(6).starts_with("1.544321"));
    }
}
