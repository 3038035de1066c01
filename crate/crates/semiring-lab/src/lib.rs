//! Decision procedures for finite semirings and bounded symbolic
//! semidomains.
//!
//! The library represents finite semirings by Cayley tables, computes
//! their ideal lattices, radicals, and fraction semifields, and decides
//! the properties tied together by the classical characterization
//! theorems for linearly ordered prime ideals: valuation, GCD, divided,
//! and pseudo-valuation semidomains. Every theorem condition is
//! implemented as an independent predicate so the equivalences can be
//! cross-checked exhaustively over an enumerated corpus; two infinite
//! instances (the naturals and the min-plus tropical semiring) are
//! exercised through exact oracles with bounded searches.
//!
//! Scans are data-parallel via rayon when the `parallel` feature (default)
//! is enabled, with an identical sequential fallback without it.

pub mod catalog;
pub mod classify;
pub mod dot;
pub mod enumerate;
pub mod fractions;
pub mod ideals;
mod par;
pub mod report;
pub mod semiring;
pub mod symbolic;
pub mod verdict;

pub use ideals::{ClosureFailure, Ideal, Nonunits};
pub use semiring::{ElementId, FiniteSemiring, RawTables};
pub use verdict::Verdict;
