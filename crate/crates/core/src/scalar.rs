//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating point scalar the algebra, geometry and exponential code is generic over.
///
/// Implemented for `f32` and `f64`.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static {
    /// Threshold on `|tr A|` / `|tr A²|` below which the degenerate closed-form branch is used.
    const BRANCH_EPS: Self;

    /// Lossy conversion from an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }
}

impl Real for f32 {
    const BRANCH_EPS: f32 = 1e-6;
}

impl Real for f64 {
    const BRANCH_EPS: f64 = 1e-12;
}
