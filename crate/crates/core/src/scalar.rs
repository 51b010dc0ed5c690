//! Scalar abstraction shared by the analytic code paths.
//!
//! Every evaluator (special functions, channel densities, closed-form
//! metrics) is generic over [`Real`], so the same code runs in `f32` or `f64`.
//! The accuracy targets quoted in the docs assume `f64`.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Sum + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `sin(pi x)` with argument reduction done before the multiplication by pi,
/// so that large |x| keeps full relative accuracy near the zeros.
pub fn sin_pi<T: Real>(x: T) -> T {
    let n = x.round();
    // x - n is exact, so the result keeps full relative accuracy near zeros.
    let r = x - n;
    if r == T::zero() {
        return T::zero();
    }
    let odd = (n * T::lit(0.5)).fract() != T::zero();
    let v = (T::PI() * r).sin();
    if odd {
        -v
    } else {
        v
    }
}

/// Distance from `x` to the nearest integer.
pub fn dist_to_int<T: Real>(x: T) -> T {
    (x - x.round()).abs()
}

/// True when `x` is within `tol` of an integer.
pub fn near_int<T: Real>(x: T, tol: T) -> bool {
    dist_to_int(x) <= tol
}
