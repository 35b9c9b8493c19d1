//! Scalar abstraction shared by every numeric module.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Real floating-point scalar the library is generic over (`f32`, `f64`).
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into `Self`.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    /// Converts a count or index into `Self`.
    #[inline]
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("integer representable in scalar type")
    }

    /// Working tolerance for unitarity and round-trip checks: `1e-12` in
    /// double precision, scaled by machine epsilon otherwise.
    #[inline]
    fn default_tol() -> Self {
        (Self::epsilon() * Self::of(4500.0)).max(Self::of(1e-12))
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex number over a [`Real`] scalar.
pub type C<T> = Complex<T>;

#[inline]
pub(crate) fn cis<T: Real>(phase: T) -> C<T> {
    C::new(phase.cos(), phase.sin())
}

#[inline]
pub(crate) fn cot<T: Real>(x: T) -> T {
    x.cos() / x.sin()
}

#[inline]
pub(crate) fn clamp_unit<T: Real>(x: T) -> T {
    x.max(-T::one()).min(T::one())
}

/// `e^{2πi·r/n}` with the exponent reduced modulo `n` before scaling.
#[inline]
pub(crate) fn root_of_unity<T: Real>(r: i64, n: usize) -> C<T> {
    let n_i = n as i64;
    let reduced = r.rem_euclid(n_i) as usize;
    // exact values at quarter turns keep the permutation cases exact
    if (4 * reduced) % n == 0 {
        return match 4 * reduced / n {
            0 => C::new(T::one(), T::zero()),
            1 => C::new(T::zero(), T::one()),
            2 => C::new(-T::one(), T::zero()),
            _ => C::new(T::zero(), -T::one()),
        };
    }
    cis(T::TAU() * T::of_usize(reduced) / T::of_usize(n))
}
