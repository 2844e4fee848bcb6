//! Numerical toolkit for discrete Hardy-type inequalities on weighted
//! sequence spaces.
//!
//! The crate decides membership in the Ariño-Muckenhoupt class `B_p` and its
//! quasi-monotone extension `QB_{β,p}`, producing certified two-sided brackets
//! for the class constants.  On top of the class machinery it verifies the
//! boundedness characterization for generalized Hardy averaging operators,
//! computes the open-ended exponent improvement `p → p − ε` with a verified ε,
//! and runs extrapolation checks that transport an inequality from a base
//! exponent `p0` to any `p ≥ p0`.
//!
//! Everything that involves an infinite sum is evaluated with an explicit
//! horizon plus a certified remainder bracket, so results are reported as
//! intervals that contain the exact value, not as bare point estimates.
//!
//! Core modules:
//! - [`seq`]: weight families, prefix sums, certified tail sums,
//!   quasi-monotonicity checks.
//! - [`hardy`]: plain and weighted averaging operators, memoized cumulative
//!   weights, the polynomial smoothing transform.
//! - [`classes`]: `B_p` / `QB_{β,p}` constants, doubling conditions, the
//!   index-shift equivalence between the two classes.
//! - [`verify`]: two-sided verification of the averaging-operator inequality
//!   (truncated-power lower bounds against closed-form upper bounds).
//! - [`extrapolate`]: open-ended ε improvement, embedding weights, and the
//!   exponent extrapolation pipeline.
//! - [`lemmas`]: sandwich oracles for the elementary inequalities the rest of
//!   the crate leans on.

pub mod classes;
pub mod error;
pub mod extrapolate;
pub mod hardy;
pub mod interval;
pub mod lemmas;
pub mod parse;
pub mod report;
pub mod scalar;
pub mod seq;
pub mod suite;
pub mod sum;
pub mod verify;

pub use error::Error;
pub use interval::Interval;
pub use scalar::Scalar;
pub use seq::{QuasiSequence, TailMode, TruncationPolicy, WeightSequence};

/// Convenience aliases at the default precision.
pub type Interval64 = Interval<f64>;
pub type Weight64 = WeightSequence<f64>;
pub type Quasi64 = QuasiSequence<f64>;
pub type Policy64 = TruncationPolicy<f64>;
pub type Estimate64 = classes::ConstantEstimate<f64>;
pub type Phi64 = extrapolate::PhiFunction<f64>;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
