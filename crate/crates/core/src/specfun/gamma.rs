//! Log-gamma for real and complex arguments.
//!
//! Both paths use the 14-term Lanczos approximation with `g = 671/128`,
//! which holds close to full double precision for `Re z >= 1/2`. The left
//! half-plane is reached through the reflection formula.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{near_int, sin_pi, Real};

const LANCZOS_G: f64 = 671.0 / 128.0;
const LANCZOS_C0: f64 = 0.999_999_999_999_997_1;
const LANCZOS: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];
const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;

/// Natural log of the gamma function for `x > 0`.
pub fn ln_gamma<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(Error::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    Ok(ln_gamma_pos(x))
}

pub(crate) fn ln_gamma_pos<T: Real>(x: T) -> T {
    if x < T::lit(0.5) {
        // Γ(x) = Γ(x + 1) / x keeps the Lanczos sum in its accurate range.
        return ln_gamma_pos(x + T::one()) - x.ln();
    }
    let g = T::lit(LANCZOS_G);
    let half = T::lit(0.5);
    let tmp = x + g;
    let tmp = (x + half) * tmp.ln() - tmp;
    let mut ser = T::lit(LANCZOS_C0);
    let mut y = x;
    for &c in LANCZOS.iter() {
        y = y + T::one();
        ser = ser + T::lit(c) / y;
    }
    tmp + (T::lit(SQRT_TWO_PI) * ser / x).ln()
}

fn lanczos_linear<T: Real>(x: T) -> T {
    let tmp = x + T::lit(LANCZOS_G);
    let mut ser = T::lit(LANCZOS_C0);
    let mut y = x;
    for &c in LANCZOS.iter() {
        y = y + T::one();
        ser = ser + T::lit(c) / y;
    }
    let p = tmp.powf((x + T::lit(0.5)) * T::lit(0.5));
    p * ((-tmp).exp() * p) * T::lit(SQRT_TWO_PI) * ser / x
}

/// `Γ(x)` in linear form for `|x| <= 100`, with the pole convention of
/// [`ln_gamma_signed`]: at `-n` the value is `(-1)^n / n!` and the second
/// component is 1.
pub(crate) fn gamma_linear<T: Real>(x: T) -> (T, i32) {
    if x >= T::lit(0.5) {
        return (lanczos_linear(x), 0);
    }
    if x > T::zero() {
        return (lanczos_linear(x + T::one()) / x, 0);
    }
    if near_int(x, pole_tolerance(x)) {
        let n = -x.round();
        let odd = (n * T::lit(0.5)).fract() != T::zero();
        let v = T::one() / lanczos_linear(n + T::one());
        return (if odd { -v } else { v }, 1);
    }
    (T::PI() / (sin_pi(x) * lanczos_linear(T::one() - x)), 0)
}

/// `ln|Γ(x)|` together with the sign of `Γ(x)` and its pole order.
///
/// At a non-positive integer `-n` the gamma function has a simple pole;
/// there `ln_abs` and `sign` describe the residue factor `(-1)^n / n!` and
/// `pole_order` is 1. Everywhere else `pole_order` is 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLnGamma<T> {
    pub ln_abs: T,
    pub sign: T,
    pub pole_order: i32,
}

/// Tolerance used to decide that a gamma argument sits on a pole.
pub(crate) fn pole_tolerance<T: Real>(x: T) -> T {
    T::lit(1e-10) * (T::one() + x.abs())
}

pub fn ln_gamma_signed<T: Real>(x: T) -> SignedLnGamma<T> {
    if x > T::zero() {
        return SignedLnGamma {
            ln_abs: ln_gamma_pos(x),
            sign: T::one(),
            pole_order: 0,
        };
    }
    if near_int(x, pole_tolerance(x)) {
        let n = -x.round();
        let parity = n.to_u64().unwrap_or(0) % 2;
        return SignedLnGamma {
            ln_abs: -ln_gamma_pos(n + T::one()),
            sign: if parity == 0 { T::one() } else { -T::one() },
            pole_order: 1,
        };
    }
    // Γ(x) Γ(1 - x) = π / sin(π x)
    let s = sin_pi(x);
    SignedLnGamma {
        ln_abs: T::PI().ln() - s.abs().ln() - ln_gamma_pos(T::one() - x),
        sign: s.signum(),
        pole_order: 0,
    }
}

/// `ln Γ(z)` for complex `z` away from the non-positive integers. The
/// imaginary part is some branch of `arg Γ(z)`; only `exp` of the result
/// is meaningful.
pub fn ln_gamma_complex<T: Real>(z: Complex<T>) -> Complex<T> {
    let half = T::lit(0.5);
    if z.re < half {
        // ln Γ(z) = ln π - ln sin(π z) - ln Γ(1 - z)
        let one = Complex::new(T::one(), T::zero());
        return Complex::new(T::PI().ln(), T::zero()) - ln_sin_pi(z) - ln_gamma_complex(one - z);
    }
    let g = T::lit(LANCZOS_G);
    let tmp = z + g;
    let tmp = (z + half) * tmp.ln() - tmp;
    let mut ser = Complex::new(T::lit(LANCZOS_C0), T::zero());
    let mut y = z;
    for &c in LANCZOS.iter() {
        y = y + T::one();
        ser = ser + Complex::new(T::lit(c), T::zero()) / y;
    }
    tmp + (ser * T::lit(SQRT_TWO_PI) / z).ln()
}

/// `ln sin(π z)` that stays finite for large `|Im z|`.
fn ln_sin_pi<T: Real>(z: Complex<T>) -> Complex<T> {
    let pi = T::PI();
    let i = Complex::new(T::zero(), T::one());
    if z.im.abs() < T::lit(5.0) {
        return (z * pi).sin().ln();
    }
    // sin(πz) = (e^{iπz} - e^{-iπz}) / 2i; factor out the dominant exponential.
    let two_i = Complex::new(T::zero(), T::lit(2.0));
    if z.im > T::zero() {
        let small = (i * z * (pi + pi)).exp();
        -(i * z * pi) - two_i.ln() + (Complex::new(T::one(), T::zero()) - small).ln()
            + Complex::new(T::zero(), pi)
    } else {
        let small = (-(i * z) * (pi + pi)).exp();
        i * z * pi - two_i.ln() + (Complex::new(T::one(), T::zero()) - small).ln()
    }
}

/// `ln(n!)`.
pub fn ln_factorial<T: Real>(n: usize) -> T {
    ln_gamma_pos(T::from_usize_lossy(n) + T::one())
}

/// Pochhammer symbol `(a)_n` by direct product.
pub fn pochhammer<T: Real>(a: T, n: usize) -> T {
    (0..n).fold(T::one(), |acc, k| acc * (a + T::from_usize_lossy(k)))
}
