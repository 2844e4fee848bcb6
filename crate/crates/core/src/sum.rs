//! Compensated accumulation.
//!
//! Long scans here add up to 10^6 terms; a Neumaier accumulator keeps the
//! committed error within a few ulps of the exact sum regardless of term
//! ordering or magnitude spread.

use crate::scalar::Scalar;

/// Neumaier variant of Kahan summation.
#[derive(Clone, Copy, Debug, Default)]
pub struct Accumulator<S> {
    sum: S,
    compensation: S,
}

impl<S: Scalar> Accumulator<S> {
    pub fn new() -> Self {
        Self {
            sum: S::zero(),
            compensation: S::zero(),
        }
    }

    pub fn add(&mut self, term: S) {
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.compensation += (self.sum - t) + term;
        } else {
            self.compensation += (term - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> S {
        self.sum + self.compensation
    }
}

/// Compensated sum of an iterator of terms.
pub fn compensated<S: Scalar>(terms: impl IntoIterator<Item = S>) -> S {
    let mut acc = Accumulator::new();
    for t in terms {
        acc.add(t);
    }
    acc.value()
}
