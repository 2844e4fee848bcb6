//! Weight sequences, truncation policies, and certified sums.
//!
//! A weight is a non-negative sequence `w(1), w(2), …` drawn from one of
//! three representations: a pure power `k^α`, a power with a logarithmic
//! factor `k^α (1 + ln k)^γ`, or an explicit finite list with an optional
//! power continuation.  Every family has an exact eventual form, which is what
//! makes the tail brackets in this module certified rather than heuristic:
//! beyond the explicit horizon the summand is a known power-log term, and the
//! remainder is pinned between integral comparisons with explicit envelope
//! constants.

use crate::error::Error;
use crate::interval::Interval;
use crate::scalar::Scalar;
use crate::sum::Accumulator;
use crate::Result;

/// How an infinite sum's remainder beyond the horizon is handled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailMode {
    /// Integral-comparison bracket on the closed-form remainder.
    CertifiedIntegral,
    /// No analytic model; only sums that literally terminate are accepted.
    None,
}

/// Horizon and tolerance bundle threaded through every scan.
#[derive(Clone, Copy, Debug)]
pub struct TruncationPolicy<S> {
    pub horizon: u64,
    pub tail_mode: TailMode,
    pub rel_tol: S,
}

impl<S: Scalar> TruncationPolicy<S> {
    pub fn new(horizon: u64, tail_mode: TailMode, rel_tol: S) -> Result<Self> {
        if horizon == 0 {
            return Err(Error::OutOfRange("horizon must be at least 1".into()));
        }
        if !(rel_tol > S::zero() && rel_tol < S::one()) {
            return Err(Error::OutOfRange(format!(
                "rel_tol must lie in (0, 1), got {rel_tol}"
            )));
        }
        Ok(Self {
            horizon,
            tail_mode,
            rel_tol,
        })
    }

    pub fn with_horizon(horizon: u64) -> Self {
        Self::new(horizon, TailMode::CertifiedIntegral, S::from_real(1e-9))
            .expect("valid default policy")
    }
}

impl<S: Scalar> Default for TruncationPolicy<S> {
    fn default() -> Self {
        Self::with_horizon(100_000)
    }
}

/// Eventual closed form of a weight beyond its explicit values.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Asymptotic<S> {
    /// Identically zero beyond a finite support.
    Zero,
    /// Exactly `k^rho (1 + ln k)^gamma` beyond the explicit range.
    PowerLog { rho: S, gamma: S },
}

#[derive(Clone, Debug, PartialEq)]
enum Family<S> {
    Power { alpha: S },
    PowerLog { alpha: S, gamma: S },
    Explicit { values: Vec<S>, tail: Option<S> },
}

/// A non-negative weight sequence indexed from 1.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSequence<S> {
    family: Family<S>,
}

impl<S: Scalar> WeightSequence<S> {
    /// `w(k) = k^alpha`.
    pub fn power(alpha: S) -> Self {
        Self {
            family: Family::Power { alpha },
        }
    }

    /// `w(k) = k^alpha (1 + ln k)^gamma`.
    pub fn power_log(alpha: S, gamma: S) -> Self {
        Self {
            family: Family::PowerLog { alpha, gamma },
        }
    }

    /// Explicit 1-indexed values, zero beyond the list.
    pub fn explicit(values: Vec<S>) -> Result<Self> {
        Self::explicit_with_tail(values, None)
    }

    /// Explicit values continued by `k^alpha` beyond the list.
    pub fn explicit_with_tail(values: Vec<S>, tail: Option<S>) -> Result<Self> {
        if values.is_empty() && tail.is_none() {
            return Err(Error::InvalidInput(
                "explicit weight needs at least one value or a tail".into(),
            ));
        }
        for (i, v) in values.iter().enumerate() {
            if !(v.is_finite() && *v >= S::zero()) {
                return Err(Error::InvalidInput(format!(
                    "explicit weight value at index {} is not a finite non-negative number",
                    i + 1
                )));
            }
        }
        Ok(Self {
            family: Family::Explicit { values, tail },
        })
    }

    /// Value at index `k ≥ 1`.
    pub fn eval(&self, k: u64) -> S {
        debug_assert!(k >= 1);
        match &self.family {
            Family::Power { alpha } => pow_index(k, *alpha),
            Family::PowerLog { alpha, gamma } => {
                pow_index(k, *alpha) * log_factor::<S>(k).powf(*gamma)
            }
            Family::Explicit { values, tail } => {
                if (k as usize) <= values.len() {
                    values[k as usize - 1]
                } else {
                    match tail {
                        Some(alpha) => pow_index(k, *alpha),
                        None => S::zero(),
                    }
                }
            }
        }
    }

    /// Number of explicitly stored leading values (0 for closed forms).
    pub fn explicit_len(&self) -> u64 {
        match &self.family {
            Family::Explicit { values, .. } => values.len() as u64,
            _ => 0,
        }
    }

    /// Exact form of the sequence beyond `explicit_len()`.
    pub fn asymptotic(&self) -> Asymptotic<S> {
        match &self.family {
            Family::Power { alpha } => Asymptotic::PowerLog {
                rho: *alpha,
                gamma: S::zero(),
            },
            Family::PowerLog { alpha, gamma } => Asymptotic::PowerLog {
                rho: *alpha,
                gamma: *gamma,
            },
            Family::Explicit { tail, .. } => match tail {
                Some(alpha) => Asymptotic::PowerLog {
                    rho: *alpha,
                    gamma: S::zero(),
                },
                None => Asymptotic::Zero,
            },
        }
    }

    /// Termwise multiplication by `k^e`, which keeps every family closed.
    pub fn shift_exponent(&self, e: S) -> Self {
        match &self.family {
            Family::Power { alpha } => Self::power(*alpha + e),
            Family::PowerLog { alpha, gamma } => Self::power_log(*alpha + e, *gamma),
            Family::Explicit { values, tail } => {
                let shifted = values
                    .iter()
                    .enumerate()
                    .map(|(i, v)| *v * pow_index(i as u64 + 1, e))
                    .collect();
                Self {
                    family: Family::Explicit {
                        values: shifted,
                        tail: tail.map(|alpha| alpha + e),
                    },
                }
            }
        }
    }

    /// Short text form, also used by the CLI mini-language printer.
    pub fn describe(&self) -> String {
        match &self.family {
            Family::Power { alpha } => format!("power:alpha={alpha}"),
            Family::PowerLog { alpha, gamma } => format!("powerlog:alpha={alpha},gamma={gamma}"),
            Family::Explicit { values, tail } => match tail {
                Some(alpha) => format!("explicit[{}]+power:alpha={alpha}", values.len()),
                None => format!("explicit[{}]", values.len()),
            },
        }
    }
}

fn pow_index<S: Scalar>(k: u64, e: S) -> S {
    if e == S::zero() {
        S::one()
    } else if e == S::one() {
        S::from_index(k)
    } else {
        S::from_index(k).powf(e)
    }
}

/// `1 + ln k` as a scalar.
fn log_factor<S: Scalar>(k: u64) -> S {
    S::one() + S::from_index(k).ln()
}

/// Whether `Σ k^rho (1 + ln k)^gamma` converges.
pub fn powerlog_converges<S: Scalar>(rho: S, gamma: S) -> bool {
    let minus_one = -S::one();
    rho < minus_one || (rho == minus_one && gamma < minus_one)
}

/// Certified bracket for `Σ_{k=start}^∞ k^rho (1 + ln k)^gamma`.
///
/// The remainder beyond an internally chosen index is pinned between integral
/// comparisons; for the logarithmic factor the integral itself is bracketed by
/// exponential envelopes with explicit constants, so both ends are rigorous.
pub fn certified_tail<S: Scalar>(start: u64, rho: S, gamma: S) -> Result<Interval<S>> {
    if !powerlog_converges(rho, gamma) {
        return Err(Error::DivergentTail);
    }
    let start = start.max(1);
    let term = |k: u64| pow_index(k, rho) * log_factor::<S>(k).powf(gamma);

    if rho == -S::one() {
        // Closed-form antiderivative: ((1 + ln t)^{gamma+1}) / (gamma + 1).
        let integral = |m: u64| log_factor::<S>(m).powf(gamma + S::one()) / (-gamma - S::one());
        return Ok(Interval::new(integral(start), term(start) + integral(start)));
    }

    let d1 = -rho - S::one();
    // Push the bracket start past the point where the summand is
    // non-increasing and the upper envelope exponent stays positive.
    let mut from = start;
    if gamma > S::zero() {
        let mono = (gamma / (-rho) - S::one()).exp();
        let envelope = (S::from_real(2.0) * gamma / d1 - S::one()).exp();
        let needed = mono.max(envelope);
        if needed > S::from_real(1e7) {
            return Err(Error::UncertifiableTail(format!(
                "summand monotone only beyond index {needed}"
            )));
        }
        from = from.max(needed.ceil().to_u64().unwrap_or(u64::MAX).max(1));
    }

    let mut head = Accumulator::new();
    for k in start..from {
        head.add(term(k));
    }
    let head = head.value();

    let u0 = log_factor::<S>(from);
    let a = u0.powf(gamma) * pow_index(from, rho + S::one());
    let d2 = d1 - gamma / u0;
    debug_assert!(d2 > S::zero());
    let integral_lo = a / d1.max(d2);
    let integral_hi = a / d1.min(d2);
    Ok(Interval::new(
        head + integral_lo,
        head + term(from) + integral_hi,
    ))
}

/// `Σ_{k=1}^{n} k^e · w(k)` with compensated accumulation.
pub fn prefix_weighted_sum<S: Scalar>(w: &WeightSequence<S>, n: u64, e: S) -> S {
    let mut acc = Accumulator::new();
    for k in 1..=n {
        acc.add(pow_index(k, e) * w.eval(k));
    }
    acc.value()
}

/// Certified bracket for `Σ_{k=n}^∞ (n/k)^p w(k)`.
///
/// Under `TailMode::None` only sums with finite support inside the horizon
/// are accepted; anything else has no certifiable remainder.
pub fn tail_power_sum<S: Scalar>(
    w: &WeightSequence<S>,
    n: u64,
    p: S,
    policy: &TruncationPolicy<S>,
) -> Result<Interval<S>> {
    if n == 0 {
        return Err(Error::OutOfRange("tail start index must be ≥ 1".into()));
    }
    if p < S::zero() {
        return Err(Error::OutOfRange(format!(
            "tail decay exponent must be non-negative, got {p}"
        )));
    }
    let asym = w.asymptotic();
    if let Asymptotic::PowerLog { rho, gamma } = asym {
        if !powerlog_converges(rho - p, gamma) {
            return Err(Error::DivergentTail);
        }
    }

    let support_end = match asym {
        Asymptotic::Zero => w.explicit_len(),
        Asymptotic::PowerLog { .. } => u64::MAX,
    };
    let edge = policy.horizon.max(n).max(w.explicit_len());
    let n_s = S::from_index(n);

    let mut head = Accumulator::new();
    let stop = edge.min(support_end);
    for k in n..=stop {
        let v = w.eval(k);
        if v != S::zero() {
            head.add((n_s / S::from_index(k)).powf(p) * v);
        }
    }
    let head = head.value();

    if support_end <= edge {
        return Ok(Interval::point(head));
    }
    match policy.tail_mode {
        TailMode::None => Err(Error::UncertifiableTail(
            "sum does not terminate within the horizon and no tail model is allowed".into(),
        )),
        TailMode::CertifiedIntegral => {
            let Asymptotic::PowerLog { rho, gamma } = asym else {
                unreachable!("infinite support implies a power-log eventual form")
            };
            let rest = certified_tail(edge + 1, rho - p, gamma)?.scale(n_s.powf(p));
            Ok(Interval::new(head + rest.lo, head + rest.hi))
        }
    }
}

/// Outcome of a quasi-monotonicity scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuasiCheck {
    pub ok: bool,
    pub first_violation: Option<u64>,
}

/// Checks that `k^{-beta} y(k)` is non-increasing for `1 ≤ k < n`, allowing a
/// relative slack per step.  `rel_tol = 0` is the strict test.
pub fn is_quasi_nonincreasing<S: Scalar>(
    y: impl Fn(u64) -> S,
    beta: S,
    n: u64,
    rel_tol: S,
) -> QuasiCheck {
    let mut prev = y(1);
    for k in 2..=n {
        let cur = pow_index(k, -beta) * y(k);
        if cur > prev * (S::one() + rel_tol) {
            return QuasiCheck {
                ok: false,
                first_violation: Some(k),
            };
        }
        prev = prev.min(cur);
    }
    QuasiCheck {
        ok: true,
        first_violation: None,
    }
}

/// Slice form of the quasi-monotonicity scan.
pub fn is_quasi_nonincreasing_slice<S: Scalar>(y: &[S], beta: S, rel_tol: S) -> QuasiCheck {
    is_quasi_nonincreasing(|k| y[k as usize - 1], beta, y.len() as u64, rel_tol)
}

/// A sequence declared quasi non-increasing of order `beta`: `k^{-beta} y(k)`
/// is non-increasing.
#[derive(Clone, Debug)]
pub struct QuasiSequence<S> {
    beta: S,
    source: WeightSequence<S>,
}

impl<S: Scalar> QuasiSequence<S> {
    pub fn new(beta: S, source: WeightSequence<S>) -> Result<Self> {
        if beta < -S::one() {
            return Err(Error::OutOfRange(format!(
                "quasi order must be ≥ -1, got {beta}"
            )));
        }
        Ok(Self { beta, source })
    }

    pub fn beta(&self) -> S {
        self.beta
    }

    pub fn source(&self) -> &WeightSequence<S> {
        &self.source
    }

    pub fn eval(&self, k: u64) -> S {
        self.source.eval(k)
    }

    /// Scans the declared monotonicity up to `n`, reporting the first index
    /// that breaks it.
    pub fn validate(&self, n: u64, rel_tol: S) -> Result<()> {
        let check = is_quasi_nonincreasing(|k| self.eval(k), self.beta, n, rel_tol);
        match check.first_violation {
            None => Ok(()),
            Some(index) => Err(Error::QuasiViolation { index }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_pairwise(terms: &[f64]) -> f64 {
        match terms.len() {
            0 => 0.0,
            1 => terms[0],
            n => naive_pairwise(&terms[..n / 2]) + naive_pairwise(&terms[n / 2..]),
        }
    }

    #[test]
    fn prefix_sum_of_identity_weight_counts() {
        let w = WeightSequence::power(1.0);
        assert_eq!(prefix_weighted_sum(&w, 3, 0.0), 6.0);
    }

    #[test]
    fn prefix_sum_sees_only_the_first_explicit_value() {
        let w = WeightSequence::explicit(vec![5.0]).unwrap();
        assert_eq!(prefix_weighted_sum(&w, 3, 2.0), 5.0);
    }

    #[test]
    fn prefix_sum_agrees_with_pairwise_oracle() {
        let w = WeightSequence::power(0.5);
        let terms: Vec<f64> = (1..=100u64)
            .map(|k| (k as f64) * (k as f64).sqrt())
            .collect();
        let oracle = naive_pairwise(&terms);
        let got = prefix_weighted_sum(&w, 100, 1.0);
        assert!((got - oracle).abs() <= 8.0 * f64::EPSILON * oracle);
    }

    #[test]
    fn certified_tail_brackets_a_zeta_remainder() {
        // Σ_{k≥10} k^{-2}, brute-forced far past the bracket's start.
        let brute: f64 = (10..=20_000_000u64).map(|k| (k as f64).powi(-2)).sum();
        let bracket = certified_tail(10, -2.0, 0.0).unwrap();
        assert!(bracket.contains(brute + 1.0 / 20_000_000.0));
        assert!(bracket.width() < 0.02);
    }

    #[test]
    fn certified_tail_handles_log_factors_on_both_sides_of_zero() {
        for gamma in [2.0, -1.5] {
            let brute: f64 = (20..=5_000_000u64)
                .map(|k| (k as f64).powi(-3) * (1.0 + (k as f64).ln()).powf(gamma))
                .sum();
            let bracket = certified_tail(20, -3.0, gamma).unwrap();
            assert!(
                bracket.contains(brute),
                "gamma={gamma}: {brute} outside [{}, {}]",
                bracket.lo,
                bracket.hi
            );
        }
    }

    #[test]
    fn certified_tail_covers_the_borderline_log_case() {
        // Σ k^{-1} (1+ln k)^{-3} converges too slowly to brute-force, so pin
        // the one-shot bracket against an explicit head plus a far restart.
        let bracket = certified_tail(5, -1.0, -3.0).unwrap();
        let head: f64 = (5..1_000_000u64)
            .map(|k| (1.0 + (k as f64).ln()).powi(-3) / k as f64)
            .sum();
        let far = certified_tail(1_000_000, -1.0, -3.0).unwrap();
        let refined = Interval::new(head + far.lo, head + far.hi);
        assert!(refined.lo <= bracket.hi && bracket.lo <= refined.hi);
        assert!(refined.width() < bracket.width());
    }

    #[test]
    fn divergent_exponents_are_rejected() {
        assert!(matches!(
            certified_tail(1, -1.0, -1.0),
            Err(Error::DivergentTail)
        ));
        assert!(matches!(
            certified_tail(1, -0.5, 0.0),
            Err(Error::DivergentTail)
        ));
    }

    #[test]
    fn tail_power_sum_brackets_the_basel_value() {
        let w = WeightSequence::power(0.0);
        let policy = TruncationPolicy::with_horizon(1_000_000);
        let got = tail_power_sum(&w, 1, 2.0, &policy).unwrap();
        let basel = core::f64::consts::PI.powi(2) / 6.0;
        assert!(got.contains(basel));
        assert!(got.rel_width() < 1e-5);
    }

    #[test]
    fn tail_power_sum_is_exact_on_finite_support() {
        let w = WeightSequence::explicit(vec![1.0, 1.0, 1.0]).unwrap();
        let policy =
            TruncationPolicy::new(10, TailMode::None, 1e-9).unwrap();
        let got = tail_power_sum(&w, 2, 3.0, &policy).unwrap();
        let exact = 1.0 + (2.0f64 / 3.0).powi(3);
        assert_eq!(got, Interval::point(exact));
    }

    #[test]
    fn tail_power_sum_reports_divergence() {
        let w = WeightSequence::power(1.2);
        let policy = TruncationPolicy::default();
        assert!(matches!(
            tail_power_sum(&w, 1, 2.0, &policy),
            Err(Error::DivergentTail)
        ));
    }

    #[test]
    fn tail_mode_none_refuses_open_ended_families() {
        let w = WeightSequence::power(0.0);
        let policy = TruncationPolicy::new(1000, TailMode::None, 1e-6).unwrap();
        assert!(matches!(
            tail_power_sum(&w, 1, 2.0, &policy),
            Err(Error::UncertifiableTail(_))
        ));
    }

    #[test]
    fn quasi_scan_accepts_a_decaying_profile() {
        // y(k) = k^{1/2} (1 + 1/k): the normalized sequence is 1 + 1/k.
        let check = is_quasi_nonincreasing(
            |k| (k as f64).sqrt() * (1.0 + 1.0 / k as f64),
            0.5,
            10_000,
            0.0,
        );
        assert!(check.ok);
    }

    #[test]
    fn quasi_scan_pinpoints_the_first_violation() {
        let y = [4.0, 2.0, 3.0, 1.0];
        let check = is_quasi_nonincreasing_slice(&y, 0.0, 0.0);
        assert_eq!(check.first_violation, Some(3));
    }

    #[test]
    fn pure_power_sits_exactly_on_its_own_quasi_boundary() {
        for alpha in [0.3, 1.0, 2.5] {
            let w = WeightSequence::power(alpha);
            let check =
                is_quasi_nonincreasing(|k| w.eval(k), alpha, 5_000, 1e-12);
            assert!(check.ok, "alpha={alpha}");
            let stricter =
                is_quasi_nonincreasing(|k| w.eval(k), alpha - 0.1, 50, 1e-12);
            assert!(!stricter.ok, "alpha={alpha} should violate beta={}", alpha - 0.1);
        }
    }

    #[test]
    fn quasi_sequence_validates_its_declaration() {
        let good = QuasiSequence::new(1.0, WeightSequence::power(0.5)).unwrap();
        assert!(good.validate(1000, 0.0).is_ok());
        let bad = QuasiSequence::new(0.0, WeightSequence::power(0.5)).unwrap();
        assert!(matches!(
            bad.validate(1000, 1e-9),
            Err(Error::QuasiViolation { index: 2 })
        ));
    }

    #[test]
    fn exponent_shift_keeps_families_closed() {
        let w = WeightSequence::explicit_with_tail(vec![2.0, 3.0], Some(-2.0)).unwrap();
        let shifted = w.shift_exponent(1.0);
        assert_eq!(shifted.eval(1), 2.0);
        assert_eq!(shifted.eval(2), 6.0);
        assert_eq!(shifted.eval(5), 5.0f64.powf(-1.0));
    }

    #[test]
    fn policy_rejects_degenerate_parameters() {
        assert!(TruncationPolicy::<f64>::new(0, TailMode::None, 0.5).is_err());
        assert!(TruncationPolicy::<f64>::new(10, TailMode::None, 0.0).is_err());
        assert!(TruncationPolicy::<f64>::new(10, TailMode::None, 1.0).is_err());
    }

    #[test]
    fn reduced_precision_instantiation_compiles_and_sums() {
        let w: WeightSequence<f32> = WeightSequence::power(1.0);
        assert_eq!(prefix_weighted_sum(&w, 4, 0.0), 10.0_f32);
    }
}
