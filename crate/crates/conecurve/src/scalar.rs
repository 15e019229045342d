//! Scalar abstraction: the whole library is generic over the floating type.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, NumCast};

/// Floating scalar the geometry runs on (f32 or f64).
pub trait Real:
    Float + FromPrimitive + NumCast + Debug + Display + Default + Send + Sync + 'static
{
    /// Lift an f64 constant into the scalar type.
    #[inline]
    fn c(x: f64) -> Self {
        Self::from_f64(x).expect("constant representable")
    }

    #[inline]
    fn pi() -> Self {
        Self::c(std::f64::consts::PI)
    }

    #[inline]
    fn two_pi() -> Self {
        Self::c(std::f64::consts::TAU)
    }

    #[inline]
    fn half() -> Self {
        Self::c(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::c(2.0)
    }

    #[inline]
    fn as_f64(self) -> f64 {
        NumCast::from(self).expect("scalar convertible to f64")
    }
}

impl<T> Real for T where
    T: Float + FromPrimitive + NumCast + Debug + Display + Default + Send + Sync + 'static
{
}

/// Normalize an angle to the half-open interval [0, modulus).
pub fn wrap_nonneg<T: Real>(angle: T, modulus: T) -> T {
    let mut a = angle % modulus;
    if a < T::zero() {
        a = a + modulus;
    }
    // `%` can return exactly `modulus` after the correction when `angle` is a
    // tiny negative number.
    if a >= modulus {
        a = a - modulus;
    }
    a
}

/// Normalize an angle to (-pi, pi].
pub fn wrap_to_pi<T: Real>(angle: T) -> T {
    let two_pi = T::two_pi();
    let mut a = wrap_nonneg(angle, two_pi);
    if a > T::pi() {
        a = a - two_pi;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_ranges() {
        let tau = std::f64::consts::TAU;
        assert!((wrap_nonneg(-0.1, tau) - (tau - 0.1)).abs() < 1e-12);
        assert!((wrap_to_pi(3.5 * std::f64::consts::PI) - (-0.5 * std::f64::consts::PI)).abs() < 1e-12);
        let f: f32 = wrap_nonneg(7.0, std::f32::consts::TAU);
        assert!(f >= 0.0 && f < std::f32::consts::TAU);
    }
}
