//! Independent reference distributions shared by the integration tests.
#![allow(dead_code)]

use rf_fso_secrecy::quad::integrate_positive;
use rf_fso_secrecy::specfun::ln_gamma;

pub mod meijer_cases;
pub mod mellin;

/// Regularized lower incomplete gamma `P(s, x)`.
pub fn gamma_p(s: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x < s + 1.0 {
        lower_series(s, x)
    } else {
        1.0 - upper_fraction(s, x) / ln_gamma(s).unwrap().exp()
    }
}

/// `Γ(s, x)` for `s > 0`, unregularized.
pub fn upper_gamma(s: f64, x: f64) -> f64 {
    assert!(s > 0.0);
    if x <= 0.0 {
        return ln_gamma(s).unwrap().exp();
    }
    if x < s + 1.0 {
        ln_gamma(s).unwrap().exp() * (1.0 - lower_series(s, x))
    } else {
        upper_fraction(s, x)
    }
}

fn lower_series(s: f64, x: f64) -> f64 {
    let mut term = 1.0 / s;
    let mut sum = term;
    let mut n = 1.0;
    while term.abs() > sum.abs() * 1e-17 {
        term *= x / (s + n);
        sum += term;
        n += 1.0;
    }
    sum * (s * x.ln() - x - ln_gamma(s).unwrap()).exp()
}

// Lentz continued fraction for Γ(s, x).
fn upper_fraction(s: f64, x: f64) -> f64 {
    let tiny = 1e-300;
    let mut b = x + 1.0 - s;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..10_000 {
        let an = -(i as f64) * (i as f64 - s);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (s * x.ln() - x).exp() * h
}

/// Gamma-Gamma irradiance with pointing error, `I = X Y Z` where
/// `X ~ Gamma(a, 1/a)`, `Y ~ Gamma(b, 1/b)` and `Pr{Z < z} = z^{ε²}` on
/// `(0, 1]`.
#[derive(Debug, Clone, Copy)]
pub struct GammaGamma {
    pub a: f64,
    pub b: f64,
    pub eps2: f64,
}

impl GammaGamma {
    pub fn new(a: f64, b: f64, eps: f64) -> Self {
        assert!(a > eps * eps, "oracle needs a > ε²");
        Self { a, b, eps2: eps * eps }
    }

    /// Mean of `X Y Z`.
    pub fn mean(&self) -> f64 {
        self.eps2 / (self.eps2 + 1.0)
    }

    fn y_pdf(&self, y: f64) -> f64 {
        let b = self.b;
        (b * b.ln() + (b - 1.0) * y.ln() - b * y - ln_gamma(b).unwrap()).exp()
    }

    fn tail(&self, v: f64) -> f64 {
        let a = self.a;
        (self.eps2 * a.ln() - ln_gamma(a).unwrap()).exp() * upper_gamma(a - self.eps2, a * v)
    }

    /// `Pr{X Z < v}`.
    pub fn w_cdf(&self, v: f64) -> f64 {
        if v <= 0.0 {
            return 0.0;
        }
        gamma_p(self.a, self.a * v) + v.powf(self.eps2) * self.tail(v)
    }

    /// Density of `X Z`.
    pub fn w_pdf(&self, v: f64) -> f64 {
        if v <= 0.0 {
            return 0.0;
        }
        self.eps2 * v.powf(self.eps2 - 1.0) * self.tail(v)
    }

    /// `Pr{X Y Z < t}`.
    pub fn cdf(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return 0.0;
        }
        integrate_positive(|y: f64| if y > 0.0 { self.y_pdf(y) * self.w_cdf(t / y) } else { 0.0 }, 1.0, 1e-13, 1e-12)
            .unwrap()
            .value
    }

    pub fn pdf(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return 0.0;
        }
        integrate_positive(|y: f64| if y > 0.0 { self.y_pdf(y) * self.w_pdf(t / y) / y } else { 0.0 }, 1.0, 1e-14, 1e-12)
            .unwrap()
            .value
    }

    /// CDF of `γ = U (I / E[I])^s`.
    pub fn snr_cdf(&self, gamma: f64, u: f64, s: i32) -> f64 {
        self.cdf(self.mean() * (gamma / u).powf(1.0 / s as f64))
    }

    /// Density of `γ = U (I / E[I])^s`.
    pub fn snr_pdf(&self, gamma: f64, u: f64, s: i32) -> f64 {
        let sf = s as f64;
        let t = self.mean() * (gamma / u).powf(1.0 / sf);
        self.pdf(t) * t / (sf * gamma)
    }
}

/// Kolmogorov-Smirnov statistic of `samples` against `cdf`.
pub fn ks_statistic(samples: &mut [f64], cdf: impl Fn(f64) -> f64) -> f64 {
    samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = samples.len() as f64;
    samples.iter().enumerate().fold(0.0_f64, |d, (i, &x)| {
        let f = cdf(x);
        d.max((f - i as f64 / n).abs()).max(((i + 1) as f64 / n - f).abs())
    })
}

/// 1% critical value of the KS statistic at sample size `n`.
pub fn ks_critical_1pct(n: usize) -> f64 {
    1.628 / (n as f64).sqrt()
}

/// Monotone table of `cdf` on a logarithmic grid, linearly interpolated in
/// `ln x`; cheap stand-in for an expensive CDF in large KS tests.
pub struct CdfTable {
    ln_lo: f64,
    step: f64,
    values: Vec<f64>,
}

impl CdfTable {
    pub fn new(lo: f64, hi: f64, points: usize, cdf: impl Fn(f64) -> f64 + Sync) -> Self {
        use rayon::prelude::*;
        let ln_lo = lo.ln();
        let step = (hi.ln() - ln_lo) / (points - 1) as f64;
        let values = (0..points).into_par_iter().map(|i| cdf((ln_lo + step * i as f64).exp())).collect();
        Self { ln_lo, step, values }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let u = (x.ln() - self.ln_lo) / self.step;
        if u <= 0.0 {
            return self.values[0] * (x / (self.ln_lo.exp())).min(1.0);
        }
        let i = u.floor() as usize;
        if i + 1 >= self.values.len() {
            return *self.values.last().unwrap();
        }
        let w = u - i as f64;
        self.values[i] * (1.0 - w) + self.values[i + 1] * w
    }
}
