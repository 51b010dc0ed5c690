//! Confluent (1F1) and Gauss (2F1) hypergeometric functions for real
//! arguments.

use crate::error::{Error, Result};
use crate::scalar::{near_int, Real};

const MAX_TERMS: usize = 10_000;

/// Neumaier-compensated running sum.
#[derive(Clone, Copy)]
struct CompensatedSum<T> {
    sum: T,
    carry: T,
}

impl<T: Real> CompensatedSum<T> {
    fn new() -> Self {
        Self {
            sum: T::zero(),
            carry: T::zero(),
        }
    }

    fn add(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry = self.carry + ((self.sum - t) + x);
        } else {
            self.carry = self.carry + ((x - t) + self.sum);
        }
        self.sum = t;
    }

    fn value(&self) -> T {
        self.sum + self.carry
    }
}

fn is_non_positive_int<T: Real>(x: T) -> bool {
    x <= T::zero() && near_int(x, T::lit(1e-12) * (T::one() + x.abs()))
}

/// Sums a hypergeometric-type series whose consecutive-term ratio is
/// `ratio(k) = t_{k+1} / t_k`. Stops once the terms are past their peak
/// and below machine precision relative to the sum.
fn sum_series<T: Real>(what: &'static str, mut ratio: impl FnMut(usize) -> T) -> Result<T> {
    let eps = T::epsilon();
    let mut acc = CompensatedSum::new();
    let mut term = T::one();
    acc.add(term);
    for k in 0..MAX_TERMS {
        let r = ratio(k);
        term = term * r;
        if term == T::zero() {
            return Ok(acc.value());
        }
        acc.add(term);
        if !acc.value().is_finite() {
            return Err(Error::Convergence {
                what,
                iterations: k + 1,
                partial: acc.value().as_f64(),
            });
        }
        if r.abs() < T::one() && term.abs() <= eps * T::lit(0.5) * acc.value().abs() {
            return Ok(acc.value());
        }
    }
    Err(Error::Convergence {
        what,
        iterations: MAX_TERMS,
        partial: acc.value().as_f64(),
    })
}

/// `ln 1F1(a; b; z)` for `a, b > 0` and `z >= 0`, where every term is
/// positive. The running sum is rescaled so that results far beyond the
/// floating-point range stay representable.
pub fn ln_hyp1f1<T: Real>(a: T, b: T, z: T) -> Result<T> {
    if !(a > T::zero() && b > T::zero() && z >= T::zero()) {
        return Err(Error::Domain(format!("ln_hyp1f1 needs a, b > 0 and z >= 0, got ({a}, {b}, {z})")));
    }
    if z > T::lit(50.0) {
        if let Some(v) = ln_hyp1f1_asymptotic(a, b, z) {
            return Ok(v);
        }
    }
    let eps = T::epsilon();
    let rescale = T::lit(1e200);
    let mut ln_scale = T::zero();
    let mut term = T::one();
    let mut acc = CompensatedSum::new();
    acc.add(term);
    for k in 0..MAX_TERMS {
        let kf = T::from_usize_lossy(k);
        let r = (a + kf) * z / ((b + kf) * (kf + T::one()));
        term = term * r;
        acc.add(term);
        if acc.value() > rescale {
            term = term / rescale;
            acc = CompensatedSum { sum: acc.value() / rescale, carry: T::zero() };
            ln_scale = ln_scale + rescale.ln();
        }
        if term == T::zero() || (r < T::one() && term <= eps * T::lit(0.5) * acc.value()) {
            return Ok(ln_scale + acc.value().ln());
        }
    }
    Err(Error::Convergence {
        what: "1F1 log series",
        iterations: MAX_TERMS,
        partial: f64::NAN,
    })
}

/// Large-`z` expansion
/// `1F1(a; b; z) ~ Γ(b)/Γ(a) e^z z^{a-b} Σ_k (b-a)_k (1-a)_k / (k! z^k)`.
/// Returns `None` when the terms start growing before reaching machine
/// precision.
fn ln_hyp1f1_asymptotic<T: Real>(a: T, b: T, z: T) -> Option<T> {
    let eps = T::epsilon();
    let mut term = T::one();
    let mut sum = T::one();
    for k in 0..200 {
        let kf = T::from_usize_lossy(k);
        let next = term * (b - a + kf) * (T::one() - a + kf) / ((kf + T::one()) * z);
        if next.abs() > term.abs() {
            return None;
        }
        term = next;
        sum = sum + term;
        if term.abs() <= eps * sum.abs() {
            if !(sum > T::zero()) {
                return None;
            }
            let lg = |x: T| super::gamma::ln_gamma_pos(x);
            return Some(lg(b) - lg(a) + z + (a - b) * z.ln() + sum.ln());
        }
    }
    None
}

/// Kummer's confluent hypergeometric function `1F1(a; b; z)`.
///
/// Non-negative arguments are summed directly (all terms share a sign when
/// `a > 0`); negative arguments go through Kummer's transformation
/// `1F1(a; b; z) = e^z 1F1(b - a; b; -z)` unless `a` is a non-positive
/// integer, in which case the direct series is a finite polynomial.
pub fn hyp1f1<T: Real>(a: T, b: T, z: T) -> Result<T> {
    if is_non_positive_int(b) {
        return Err(Error::Domain(format!("1F1 undefined for b = {b}")));
    }
    if z == T::zero() {
        return Ok(T::one());
    }
    if z > T::zero() || is_non_positive_int(a) {
        return series_1f1(a, b, z);
    }
    Ok(z.exp() * series_1f1(b - a, b, -z)?)
}

fn series_1f1<T: Real>(a: T, b: T, z: T) -> Result<T> {
    sum_series("1F1 series", |k| {
        let k = T::from_usize_lossy(k);
        (a + k) * z / ((b + k) * (k + T::one()))
    })
}

/// Gauss hypergeometric function `2F1(a, b; c; z)` for `|z| < 1`.
///
/// Negative `z` is mapped into `[0, 1/2)` by Pfaff's transformation.
pub fn hyp2f1<T: Real>(a: T, b: T, c: T, z: T) -> Result<T> {
    if is_non_positive_int(c) {
        return Err(Error::Domain(format!("2F1 undefined for c = {c}")));
    }
    if !(z.abs() < T::one()) {
        return Err(Error::Domain(format!("2F1 series requires |z| < 1, got {z}")));
    }
    if z == T::zero() {
        return Ok(T::one());
    }
    if z < T::zero() && !is_non_positive_int(a) && !is_non_positive_int(b) {
        let w = z / (z - T::one());
        return Ok((T::one() - z).powf(-a) * series_2f1(a, c - b, c, w)?);
    }
    series_2f1(a, b, c, z)
}

fn series_2f1<T: Real>(a: T, b: T, c: T, z: T) -> Result<T> {
    sum_series("2F1 series", |k| {
        let k = T::from_usize_lossy(k);
        (a + k) * (b + k) * z / ((c + k) * (k + T::one()))
    })
}
