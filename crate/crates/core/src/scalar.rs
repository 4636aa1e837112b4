//! Scalar abstraction for real-valued results.
//!
//! Claims and pixel coordinates are integers throughout the crate; only
//! derived quantities (distances, region lengths, similarity percentages)
//! are real valued. Those are generic over [`Real`] so callers can pick
//! `f32` or `f64`; the crate root exports [`crate::Scalar`] as the default.

use std::fmt::Debug;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real: Float + FromPrimitive + ToPrimitive + Debug {}

impl<T: Float + FromPrimitive + ToPrimitive + Debug> Real for T {}

/// Lossless-enough conversion from an exact pixel count.
///
/// Counts in this crate stay far below 2^53, so the conversion is exact for
/// `f64` and merely rounded for `f32`.
pub(crate) fn real_from_u64<R: Real>(v: u64) -> R {
    R::from_u64(v).expect("u64 converts into any Real")
}

pub(crate) fn real_from_f64<R: Real>(v: f64) -> R {
    R::from_f64(v).expect("f64 converts into any Real")
}
