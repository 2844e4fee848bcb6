//! Closed intervals used to report certified brackets.

use crate::scalar::Scalar;

/// A closed interval `[lo, hi]` guaranteed to contain the exact quantity it
/// reports.  `hi` may be positive infinity when only a lower bound is
/// certified.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval<S> {
    pub lo: S,
    pub hi: S,
}

impl<S: Scalar> Interval<S> {
    /// Builds an interval, panicking on an inverted or NaN pair.  Brackets are
    /// produced by the crate's own arithmetic, so an inverted pair is a logic
    /// error rather than a data error.
    pub fn new(lo: S, hi: S) -> Self {
        assert!(lo <= hi, "inverted interval [{lo}, {hi}]");
        Self { lo, hi }
    }

    pub fn point(x: S) -> Self {
        Self::new(x, x)
    }

    /// `[lo, ∞)`, used when divergence or an uncertifiable remainder leaves
    /// only the lower bound.
    pub fn unbounded_above(lo: S) -> Self {
        Self {
            lo,
            hi: S::infinity(),
        }
    }

    pub fn is_unbounded(&self) -> bool {
        self.hi == S::infinity()
    }

    pub fn contains(&self, x: S) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn width(&self) -> S {
        self.hi - self.lo
    }

    /// Width relative to the midpoint magnitude, the convergence measure the
    /// class scans report against.
    pub fn rel_width(&self) -> S {
        let mid = (self.lo.abs() + self.hi.abs()) / S::from_real(2.0);
        if mid == S::zero() {
            S::zero()
        } else {
            self.width() / mid
        }
    }

    pub fn add(&self, rhs: Self) -> Self {
        Self::new(self.lo + rhs.lo, self.hi + rhs.hi)
    }

    pub fn add_scalar(&self, x: S) -> Self {
        Self::new(self.lo + x, self.hi + x)
    }

    /// Scales by a non-negative factor.
    pub fn scale(&self, c: S) -> Self {
        debug_assert!(c >= S::zero());
        Self::new(self.lo * c, self.hi * c)
    }

    /// Smallest interval containing both inputs.
    pub fn hull(&self, rhs: Self) -> Self {
        Self::new(self.lo.min(rhs.lo), self.hi.max(rhs.hi))
    }
}
