//! Parity-constrained best rational approximation of quadratic irrationals,
//! computed three independent ways: from continued fractions, from
//! reflection-word expansions, and from brute-force definitional scans.

pub mod class;
pub mod delta;
pub mod error;
pub mod exact;
pub mod maps;
pub mod oracle;
pub mod parity;
pub mod rcf;
pub mod sample;
pub mod sets;

pub use class::{parity_of, parity_of_rational, ClassFilter, ClassPair, ParityClass, Symbol};
pub use delta::{DeltaApproximations, DeltaStream, DeltaWord};
pub use error::{Error, Result};
pub use exact::{ExtRational, ExtendedReal, Mat2, PermS3, QuadraticSurd};
pub use maps::{CfMapKind, MapStep};
pub use parity::{ApproxKind, ApproxRecord, SetSelector};
pub use sets::{ApproxSets, Limit};
