//! Floating-point scalar abstraction for the numeric half of the crate.

use num_traits::{Float, FloatConst, FromPrimitive};
use rustfft::FftNum;

/// Floating scalar the grid machinery is generic over: `f32` or `f64`.
///
/// `FftNum` brings the bounds rustfft needs; `Float + FloatConst` covers the
/// transcendental functions and π. Everything else is derived from `f64`
/// literals through [`Real::of`].
pub trait Real: Float + FloatConst + FromPrimitive + FftNum {
    /// Lossy conversion from an `f64` literal.
    fn of(x: f64) -> Self;
    /// Lossy conversion to `f64` (for reports and serialization).
    fn to_f64_lossy(self) -> f64;
}

impl Real for f32 {
    fn of(x: f64) -> Self {
        x as f32
    }
    fn to_f64_lossy(self) -> f64 {
        self as f64
    }
}

impl Real for f64 {
    fn of(x: f64) -> Self {
        x
    }
    fn to_f64_lossy(self) -> f64 {
        self
    }
}
