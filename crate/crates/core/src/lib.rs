//! Recurrence and orbit-complexity toolkit for interval dynamics.
//!
//! The crate computes quantitative recurrence indicators (closest returns,
//! return times to balls, arcs and cylinders, recurrence rates) and
//! compression-based information proxies for three families of
//! zero-entropy or intermittent systems on the unit interval:
//!
//! * irrational circle rotations, analysed exactly through continued
//!   fractions and the three-gap theorem ([`circle`], [`diophantine`]),
//! * interval exchange transformations with exact rational or quadratic
//!   arithmetic ([`iet`]),
//! * full-branch Markov maps — the doubling map and the intermittent
//!   family `x + x^z mod 1` ([`interval_maps`]).
//!
//! A system-agnostic instrumentation layer ([`recurrence`]) provides the
//! brute-force scans used as oracles against the closed-form results, and
//! [`complexity`] supplies the LZ76-style coder, the periodicity-aware
//! coder, block entropy and growth-exponent fitting.

pub mod circle;
pub mod complexity;
pub mod diophantine;
pub mod error;
pub mod iet;
pub mod interval_maps;
pub mod real;
pub mod recurrence;
pub mod suffix;
pub mod surd;
pub mod thresholds;
pub mod util;

pub use error::{Error, Result};
pub use real::Real;
