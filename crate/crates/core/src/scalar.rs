//! Scalar abstraction for the numerical core.

use num_traits::FromPrimitive;

/// Floating-point scalar the core math is generic over: `f32` or `f64`.
pub trait Real: nalgebra::RealField + FromPrimitive + Copy {}

impl Real for f32 {}
impl Real for f64 {}

/// Shorthand for pulling literal constants into the generic scalar type.
#[inline]
pub(crate) fn real<S: Real>(x: f64) -> S {
    S::from_f64(x).expect("literal representable in scalar type")
}

/// Standard gravity, m/s².
pub fn gravity<S: Real>() -> S {
    real(9.81)
}
