//! Floating-point abstraction used by every numerical routine in the crate.

use core::fmt::{Debug, Display};
use core::iter::Sum;
use core::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Scalar type the toolkit computes with.
///
/// Implemented for `f32` and `f64`.  All algorithms are written against this
/// trait; the crate root exports `f64` aliases for the common case.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Converts a sequence index into the scalar domain.
    fn from_index(k: u64) -> Self {
        Self::from_u64(k).expect("index representable")
    }

    /// Converts a literal given as `f64` into the scalar domain.
    fn from_real(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable")
    }

    /// Machine epsilon for this precision.
    fn eps() -> Self {
        Self::epsilon()
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// `|a - b| ≤ ulps · ε · max(|a|, |b|, 1)` comparison used for identity checks.
pub fn within_ulps<S: Scalar>(a: S, b: S, ulps: u32) -> bool {
    let scale = a.abs().max(b.abs()).max(S::one());
    (a - b).abs() <= S::from_u32(ulps).expect("small int") * S::eps() * scale
}

/// Slack for one-sided sandwich comparisons: `lo ≤ hi` up to `ulps` rounding.
pub fn leq_with_ulps<S: Scalar>(lo: S, hi: S, ulps: u32) -> bool {
    let scale = lo.abs().max(hi.abs()).max(S::one());
    lo <= hi + S::from_u32(ulps).expect("small int") * S::eps() * scale
}
