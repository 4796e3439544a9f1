//! Euler-type recurrences for partition counting functions.
//!
//! - [`figurate`]: figurate numbers and sparse signed theta series
//! - [`qseries`]: truncated big-integer power series, the generating-function oracle
//! - [`counting`]: enumeration and dynamic-programming oracles
//! - [`recurrence`]: scaled convolution identities (evaluate, solve, verify)
//! - [`catalog`]: the recurrences as named identities
//! - [`methods`]: computing a family table by recurrence, series, DP or enumeration
//! - [`selftest`]: product/theta series identities checked to a fixed order

pub mod catalog;
pub mod counting;
pub mod error;
pub mod family;
pub mod figurate;
pub mod methods;
pub mod qseries;
pub mod recurrence;
pub mod selftest;

pub use error::{Error, Result};
pub use family::{FamilySpec, Params, ProductFactor};
pub use figurate::{FigurateKind, Parity, Sign, SparseSeries, Term, ThetaSpec};
pub use methods::Method;
pub use qseries::{Count, DenseSeries};
pub use recurrence::{Domain, Identity, Oracle, RhsSpec, VerifyReport};
