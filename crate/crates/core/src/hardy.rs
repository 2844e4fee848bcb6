//! Averaging operators on sequences.
//!
//! The plain operator maps `y` to `n ↦ (1/n) Σ_{k≤n} y(k)`.  The weighted
//! variant replaces the count by a cumulative weight `Ψ(k) = Σ_{τ≤k} ψ(τ)`
//! and averages `f` against `ψ`.  A third transform smooths a polynomially
//! growing sequence through the normalized tail `n^q Σ_{k≥n} k^{-(q+1)} f(k)`;
//! iterating it is what drives the open-ended exponent improvement, so its
//! remainder is bracketed rather than guessed.

use crate::error::Error;
use crate::interval::Interval;
use crate::scalar::Scalar;
use crate::seq::{certified_tail, QuasiSequence, TruncationPolicy, WeightSequence};
use crate::sum::Accumulator;
use crate::Result;

/// `(1/n) Σ_{k=1}^n y(k)`.
pub fn hardy_average<S: Scalar>(y: &QuasiSequence<S>, n: u64) -> S {
    debug_assert!(n >= 1);
    let mut acc = Accumulator::new();
    for k in 1..=n {
        acc.add(y.eval(k));
    }
    acc.value() / S::from_index(n)
}

/// A non-negative averaging weight `ψ` with its cumulative sums memoized.
///
/// The table is built once at construction and never mutated, so a shared
/// reference can be used from several threads at once.
#[derive(Clone, Debug)]
pub struct PsiWeight<S> {
    source: WeightSequence<S>,
    cumulative: Vec<S>,
}

impl<S: Scalar> PsiWeight<S> {
    /// Builds the cumulative table for indices `1..=horizon` in one pass.
    pub fn new(source: WeightSequence<S>, horizon: u64) -> Result<Self> {
        if horizon == 0 {
            return Err(Error::OutOfRange("psi horizon must be ≥ 1".into()));
        }
        let mut cumulative = Vec::with_capacity(horizon as usize);
        let mut acc = Accumulator::new();
        for k in 1..=horizon {
            let v = source.eval(k);
            if !(v.is_finite() && v >= S::zero()) {
                return Err(Error::InvalidInput(format!(
                    "averaging weight is negative or non-finite at index {k}"
                )));
            }
            acc.add(v);
            cumulative.push(acc.value());
        }
        Ok(Self { source, cumulative })
    }

    pub fn source(&self) -> &WeightSequence<S> {
        &self.source
    }

    pub fn horizon(&self) -> u64 {
        self.cumulative.len() as u64
    }

    pub fn eval(&self, k: u64) -> S {
        self.source.eval(k)
    }

    /// `Ψ(n) = Σ_{τ=1}^n ψ(τ)` from the memoized table.
    pub fn cumulative(&self, n: u64) -> S {
        assert!(
            n >= 1 && n <= self.horizon(),
            "cumulative weight requested at {n}, table covers 1..={}",
            self.horizon()
        );
        self.cumulative[n as usize - 1]
    }
}

/// `(1/Ψ(n)) Σ_{τ=1}^n f(τ) ψ(τ)`.
pub fn generalized_hardy_average<S: Scalar>(
    psi: &PsiWeight<S>,
    f: impl Fn(u64) -> S,
    n: u64,
) -> Result<S> {
    let denom = psi.cumulative(n);
    if denom == S::zero() {
        return Err(Error::ZeroCumulativeWeight { index: n });
    }
    let mut acc = Accumulator::new();
    for tau in 1..=n {
        acc.add(f(tau) * psi.eval(tau));
    }
    Ok(acc.value() / denom)
}

/// Declared polynomial envelope `f(k) ≤ coeff · k^degree` for a non-negative
/// sequence handed to the smoothing transform.  The transform cannot inspect
/// an arbitrary closure's decay, so the caller states it.
#[derive(Clone, Copy, Debug)]
pub struct GrowthBound<S> {
    pub coeff: S,
    pub degree: S,
}

/// Certified bracket for `T f(n) = n^q Σ_{k=n}^∞ k^{-(q+1)} f(k)`.
///
/// The head is summed to the policy horizon; the remainder uses the declared
/// envelope, so its lower end is the summed head alone and its upper end adds
/// the enveloped tail.
pub fn smoothing_operator<S: Scalar>(
    f: impl Fn(u64) -> S,
    growth: Option<GrowthBound<S>>,
    q: S,
    n: u64,
    policy: &TruncationPolicy<S>,
) -> Result<Interval<S>> {
    if q <= S::zero() {
        return Err(Error::OutOfRange(format!(
            "smoothing exponent must be positive, got {q}"
        )));
    }
    if n == 0 {
        return Err(Error::OutOfRange("smoothing index must be ≥ 1".into()));
    }
    let Some(growth) = growth else {
        return Err(Error::UncertifiableTail(
            "smoothing transform needs a declared polynomial growth bound".into(),
        ));
    };
    if growth.degree >= q {
        return Err(Error::UncertifiableTail(format!(
            "declared growth degree {} does not clear the kernel decay {q}",
            growth.degree
        )));
    }

    let edge = policy.horizon.max(n);
    let mut head = Accumulator::new();
    for k in n..=edge {
        let v = f(k);
        debug_assert!(v >= S::zero());
        head.add(S::from_index(k).powf(-(q + S::one())) * v);
    }
    let head = head.value();
    let tail_hi = certified_tail(edge + 1, growth.degree - q - S::one(), S::zero())?
        .hi
        * growth.coeff;
    let scale = S::from_index(n).powf(q);
    Ok(Interval::new(scale * head, scale * (head + tail_hi)))
}
