//! Meijer G by direct quadrature of its Mellin-Barnes integral along a
//! vertical line, with a self-contained complex log-gamma.

use num_complex::Complex64 as C;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
#[rustfmt::skip]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9, 676.520_368_121_885_1, -1_259.139_216_722_402_8,
    771.323_428_777_653_1, -176.615_029_162_140_6, 12.507_343_278_686_905,
    -0.138_571_095_265_720_12, 9.984_369_578_019_572e-6, 1.505_632_735_149_311_6e-7,
];

/// A logarithm of `Γ(z)`; the branch is irrelevant once exponentiated.
pub fn ln_gamma(z: C) -> C {
    if z.re < 0.5 {
        return C::new(PI.ln(), 0.0) - (PI * z).sin().ln() - ln_gamma(1.0 - z);
    }
    let z = z - 1.0;
    let mut x = C::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

/// Value and cancellation ratio `∫|f| / |∫f|`.
pub struct MellinBarnes {
    pub value: f64,
    pub cancellation: f64,
}

pub fn meijer_g(m: usize, n: usize, a: &[f64], b: &[f64], x: f64) -> MellinBarnes {
    let lo = a[..n].iter().map(|v| v - 1.0).fold(f64::NEG_INFINITY, f64::max);
    let hi = b[..m].iter().copied().fold(f64::INFINITY, f64::min);
    assert!(lo < hi, "no separating line");
    let (lo, hi) = match (lo.is_finite(), hi.is_finite()) {
        (true, true) => (lo, hi),
        (false, true) => (hi - 30.0, hi),
        (true, false) => (lo, lo + 30.0),
        _ => (-15.0, 15.0),
    };
    let lx = x.ln();
    let ln_f = |s: C| -> C {
        let mut v = s * lx;
        for &bj in &b[..m] {
            v += ln_gamma(bj - s);
        }
        for &aj in &a[..n] {
            v += ln_gamma(1.0 - aj + s);
        }
        for &bj in &b[m..] {
            v -= ln_gamma(1.0 - bj + s);
        }
        for &aj in &a[n..] {
            v -= ln_gamma(aj - s);
        }
        v
    };
    let width = hi - lo;
    let c = (0..100)
        .map(|k| 0.5 * 1e-3f64.powf(k as f64 / 99.0))
        .flat_map(|u| [lo + width * u, hi - width * u])
        .min_by(|&u, &v| ln_f(C::new(u, 0.0)).re.total_cmp(&ln_f(C::new(v, 0.0)).re))
        .unwrap();
    let strip = (c - lo).min(hi - c);
    let h = strip / 8.0;
    let f = |t: f64| ln_f(C::new(c, t)).exp();
    let f0 = f(0.0).re;
    let mut sum = 0.5 * f0;
    let mut abs = 0.5 * f0.abs();
    let mut peak = f0.abs();
    for k in 1..4_000_000 {
        let v = f(k as f64 * h);
        sum += v.re;
        abs += v.norm();
        peak = peak.max(v.norm());
        if v.norm() < 1e-20 * peak && k as f64 * h > 1.0 {
            break;
        }
    }
    MellinBarnes {
        value: sum * h / PI,
        cancellation: abs / sum.abs(),
    }
}
