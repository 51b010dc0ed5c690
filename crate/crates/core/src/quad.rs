//! Adaptive Gauss–Kronrod quadrature.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::scalar::Real;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639,
    0.949_107_912_342_758_525,
    0.864_864_423_359_769_073,
    0.741_531_185_599_394_440,
    0.586_087_235_467_691_130,
    0.405_845_151_377_397_167,
    0.207_784_955_007_898_468,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_553,
    0.104_790_010_322_250_184,
    0.140_653_259_715_525_919,
    0.169_004_726_639_267_903,
    0.190_350_578_064_785_410,
    0.204_432_940_075_298_892,
    0.209_482_141_084_727_828,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693,
    0.279_705_391_489_276_668,
    0.381_830_050_505_118_945,
    0.417_959_183_673_469_388,
];

/// Default cap on the number of subintervals.
pub const MAX_INTERVALS: usize = 4000;

/// Integral estimate with its error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature<T> {
    pub value: T,
    pub error: T,
    pub evaluations: usize,
}

struct Piece<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

impl<T: Real> PartialEq for Piece<T> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<T: Real> Eq for Piece<T> {}
impl<T: Real> PartialOrd for Piece<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: Real> Ord for Piece<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.partial_cmp(&other.error).unwrap_or(Ordering::Equal)
    }
}

fn kronrod<T: Real, F: FnMut(T) -> T>(f: &mut F, a: T, b: T) -> (T, T) {
    let half = T::lit(0.5);
    let c = (a + b) * half;
    let h = (b - a) * half;
    let fc = f(c);
    let mut gauss = fc * T::lit(WG[3]);
    let mut kron = fc * T::lit(WGK[7]);
    for j in 0..7 {
        let dx = h * T::lit(XGK[j]);
        let pair = f(c - dx) + f(c + dx);
        kron = kron + pair * T::lit(WGK[j]);
        if j % 2 == 1 {
            gauss = gauss + pair * T::lit(WG[j / 2]);
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

/// Integrates `f` over `[a, b]` until the error bound falls below
/// `max(abs_tol, rel_tol * |value|)`.
pub fn integrate<T: Real, F: FnMut(T) -> T>(mut f: F, a: T, b: T, abs_tol: T, rel_tol: T) -> Result<Quadrature<T>> {
    integrate_with_limit(&mut f, a, b, abs_tol, rel_tol, MAX_INTERVALS)
}

pub fn integrate_with_limit<T: Real, F: FnMut(T) -> T>(
    f: &mut F,
    a: T,
    b: T,
    abs_tol: T,
    rel_tol: T,
    max_intervals: usize,
) -> Result<Quadrature<T>> {
    if a == b {
        return Ok(Quadrature {
            value: T::zero(),
            error: T::zero(),
            evaluations: 0,
        });
    }
    let (value, error) = kronrod(f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Piece { a, b, value, error });
    let mut total = value;
    let mut total_err = error;
    let mut evaluations = 15;
    loop {
        if !total.is_finite() {
            return Err(Error::Quadrature {
                estimate: total.as_f64(),
                error: total_err.as_f64(),
            });
        }
        if total_err <= abs_tol.max(rel_tol * total.abs()) {
            return Ok(Quadrature {
                value: total,
                error: total_err,
                evaluations,
            });
        }
        if heap.len() >= max_intervals {
            return Err(Error::Quadrature {
                estimate: total.as_f64(),
                error: total_err.as_f64(),
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = (worst.a + worst.b) * T::lit(0.5);
        if !(mid > worst.a.min(worst.b) && mid < worst.a.max(worst.b)) {
            // Interval can no longer be split; accept what we have.
            return Ok(Quadrature {
                value: total,
                error: total_err,
                evaluations,
            });
        }
        let (v1, e1) = kronrod(f, worst.a, mid);
        let (v2, e2) = kronrod(f, mid, worst.b);
        evaluations += 30;
        total = total - worst.value + v1 + v2;
        total_err = total_err - worst.error + e1 + e2;
        heap.push(Piece {
            a: worst.a,
            b: mid,
            value: v1,
            error: e1,
        });
        heap.push(Piece {
            a: mid,
            b: worst.b,
            value: v2,
            error: e2,
        });
        // Rebuild the running error sum occasionally to shed roundoff.
        if evaluations % 3000 == 15 {
            total_err = heap.iter().map(|p| p.error).fold(T::zero(), |s, e| s + e);
        }
    }
}

/// Integrates `f` over `[0, ∞)`. The range is split at `scale`; the upper
/// part is mapped to `(0, 1]` through `x = scale / t`.
pub fn integrate_positive<T: Real, F: FnMut(T) -> T>(mut f: F, scale: T, abs_tol: T, rel_tol: T) -> Result<Quadrature<T>> {
    let half = T::lit(0.5);
    let lower = integrate_with_limit(&mut f, T::zero(), scale, abs_tol * half, rel_tol, MAX_INTERVALS)?;
    let mut g = |t: T| {
        if t <= T::zero() {
            return T::zero();
        }
        let x = scale / t;
        let v = f(x) * scale / (t * t);
        if v.is_finite() {
            v
        } else {
            T::zero()
        }
    };
    let upper = integrate_with_limit(&mut g, T::zero(), T::one(), abs_tol * half, rel_tol, MAX_INTERVALS)?;
    Ok(Quadrature {
        value: lower.value + upper.value,
        error: lower.error + upper.error,
        evaluations: lower.evaluations + upper.evaluations,
    })
}
