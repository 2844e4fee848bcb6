//! Error type shared by every fallible operation in the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The requested infinite sum provably diverges.
    #[error("tail sum diverges")]
    DivergentTail,

    /// No certified remainder bound is available for the requested tail.
    #[error("tail remainder cannot be certified: {0}")]
    UncertifiableTail(String),

    /// A weighted average was requested at an index where the cumulative
    /// weight vanishes.
    #[error("cumulative weight is zero at index {index}")]
    ZeroCumulativeWeight { index: u64 },

    /// The right-hand side of a ratio is identically zero.
    #[error("ratio denominator is zero")]
    ZeroDenominator,

    /// A sequence failed its declared quasi-monotonicity.
    #[error("sequence violates quasi-monotonicity first at index {index}")]
    QuasiViolation { index: u64 },

    /// A class-membership precondition failed.
    #[error("weight is not a certified class member (verdict {verdict})")]
    NotMember { verdict: &'static str },

    /// The ε search did not find any verifying exponent improvement.
    #[error("epsilon bisection exhausted without a member verdict")]
    BisectionExhausted,

    /// A parameter fell outside its admissible range.
    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    /// The exponent regime admits no constant formula.
    #[error("no constant formula for exponent regime: {0}")]
    InvalidRegime(String),

    /// An ε grid was empty.
    #[error("epsilon grid is empty")]
    EmptyGrid,

    /// The extrapolation hypothesis failed on a panel weight.
    #[error("hypothesis fails on panel weight `{weight}`: {detail}")]
    HypothesisViolated { weight: String, detail: String },

    /// A numeric scan contradicted a formula-predicted constant.
    #[error("numeric scan contradicts predicted constant at index {index}")]
    VerificationFailure { index: u64 },

    /// A partial sum vanished where a negative power of it is needed.
    #[error("partial sum is zero at index {index} where a negative power is required")]
    ZeroPartialSum { index: u64 },

    /// A divergent sum was required but the input sums to a finite value.
    #[error("sum converges where divergence is required")]
    ConvergentSum,

    /// An index pair violated the required strict ordering.
    #[error("index range requires n < k, got n={n}, k={k}")]
    BadRange { n: u64, k: u64 },

    /// The doubling condition needed by a downstream formula does not hold.
    #[error("doubling condition does not hold on the scanned range")]
    DoublingFailed,

    /// Malformed input outside the numeric domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Mini-language or table parse failure.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI's structured error object.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivergentTail => "divergent-tail",
            Error::UncertifiableTail(_) => "uncertifiable-tail",
            Error::ZeroCumulativeWeight { .. } => "zero-cumulative-weight",
            Error::ZeroDenominator => "zero-denominator",
            Error::QuasiViolation { .. } => "quasi-violation",
            Error::NotMember { .. } => "not-member",
            Error::BisectionExhausted => "bisection-exhausted",
            Error::OutOfRange(_) => "out-of-range",
            Error::InvalidRegime(_) => "invalid-regime",
            Error::EmptyGrid => "empty-grid",
            Error::HypothesisViolated { .. } => "hypothesis-violated",
            Error::VerificationFailure { .. } => "verification-failure",
            Error::ZeroPartialSum { .. } => "zero-partial-sum",
            Error::ConvergentSum => "convergent-sum",
            Error::BadRange { .. } => "bad-range",
            Error::DoublingFailed => "doubling-failed",
            Error::InvalidInput(_) => "invalid-input",
            Error::Parse(_) => "parse-error",
            Error::Io(_) => "io-error",
        }
    }
}
