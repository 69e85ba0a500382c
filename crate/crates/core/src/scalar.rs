//! Scalar abstraction for the numerical kernels.
//!
//! Every floating-point routine in the crate (lattice sums, quadrature, the
//! small dense linear algebra) is written against [`Real`], so the same code
//! runs in `f32` and `f64`. Exact combinatorics on characteristics never
//! touches floating point.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// floating point: f32 or f64
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Lower bound for any absolute tolerance requested from the evaluators.
    fn tol_floor() -> Self;

    /// Converts an `f64` literal, panicking only for values the type cannot hold.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }
}

impl Real for f32 {
    fn tol_floor() -> Self {
        10.0 * f32::EPSILON
    }
}

impl Real for f64 {
    fn tol_floor() -> Self {
        1e-13
    }
}

/// `e^{i x}` for real `x`.
#[inline]
pub(crate) fn cis<T: Real>(x: T) -> Complex<T> {
    Complex::new(x.cos(), x.sin())
}

/// Converts an exact rational `num/den` into the scalar type.
#[inline]
pub(crate) fn ratio<T: Real>(num: i64, den: i64) -> T {
    T::from_i64(num).unwrap() / T::from_i64(den).unwrap()
}
