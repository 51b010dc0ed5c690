//! The α-κ-μ shadowed RF link between source and relay.
//!
//! Writing `y = γ^{α/2}` and `ρ = μκ / (μκ + x)`, the density is
//!
//! ```text
//! f(γ) = A1 γ^{αμ/2 - 1} exp(-A2 y) 1F1(x; μ; A3 y)
//! ```
//!
//! Expanding the confluent function term by term shows that `A2 y` is a
//! negative-binomial mixture of Gamma(μ + i, 1) laws with weights
//! `w_i = (1-ρ)^x (x)_i ρ^i / i!`. The CDF is evaluated in that form, which is
//! term-for-term the double sum over the coefficients `A5(i, j)` but avoids
//! the cancellation of `1 - Σ`.

use rand::Rng;
use rand_distr::{Distribution, Gamma, Normal};

use crate::error::{invalid, Error, Result};
use crate::scalar::Real;
use crate::specfun::{hyp2f1, ln_gamma, ln_hyp1f1};

/// Default hard cap on the number of mixture terms.
pub const DEFAULT_I_MAX: usize = 200;
/// Relative tail bound at which the mixture series stops.
pub const SERIES_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RfParams<T> {
    pub alpha: T,
    pub kappa: T,
    pub mu: u32,
    pub x_shadow: T,
    /// Average SNR, linear scale.
    pub phi_r: T,
}

impl<T: Real> RfParams<T> {
    /// Validates and builds a parameter set. `mu` is given as a real so
    /// that non-integral values can be rejected with a clear message.
    pub fn new(alpha: T, kappa: T, mu: T, x_shadow: T, phi_r: T) -> Result<Self> {
        if !(mu >= T::one()) || mu.fract() != T::zero() || !mu.is_finite() {
            return Err(invalid("mu", format!("must be a positive integer, got {mu}")));
        }
        let p = Self {
            alpha,
            kappa,
            mu: mu.to_u32().ok_or_else(|| invalid("mu", "too large"))?,
            x_shadow,
            phi_r,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let pos = |v: T| v > T::zero() && v.is_finite();
        if !pos(self.alpha) {
            return Err(invalid("alpha", format!("must be > 0, got {}", self.alpha)));
        }
        if !(self.kappa >= T::zero()) || !self.kappa.is_finite() {
            return Err(invalid("kappa", format!("must be >= 0, got {}", self.kappa)));
        }
        if self.mu == 0 {
            return Err(invalid("mu", "must be a positive integer"));
        }
        if !pos(self.x_shadow) {
            return Err(invalid("x_shadow", format!("must be > 0, got {}", self.x_shadow)));
        }
        if !pos(self.phi_r) {
            return Err(invalid("phi_r", format!("must be > 0, got {}", self.phi_r)));
        }
        Ok(())
    }

    fn mu_real(&self) -> T {
        T::from_u32(self.mu).unwrap()
    }
}

/// Constants of the closed-form density and CDF.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RfDerived<T> {
    pub d_const: T,
    pub a1: T,
    pub a2: T,
    pub a3: T,
    /// `μκ / (μκ + x)`, the success parameter of the mixture weights.
    pub rho: T,
    alpha: T,
    mu: u32,
    x_shadow: T,
}

impl<T: Real> RfDerived<T> {
    /// `A4(i) = (x)_i A3^i / ((μ)_i i!)`, the coefficient of `y^i` in the
    /// expansion of `1F1(x; μ; A3 y)`.
    pub fn a4_of(&self, i: usize) -> T {
        let mu = T::from_u32(self.mu).unwrap();
        (0..i).fold(T::one(), |acc, k| {
            let k = T::from_usize_lossy(k);
            acc * (self.x_shadow + k) * self.a3 / ((mu + k) * (k + T::one()))
        })
    }

    /// `A5(i, j) = A4(i) Γ(μ + i) / (j! A2^{μ + i - j})`.
    pub fn a5_of(&self, i: usize, j: usize) -> T {
        let n = self.mu as usize + i;
        let ln = ln_gamma(T::from_usize_lossy(n)).unwrap_or(T::zero())
            - ln_gamma(T::from_usize_lossy(j + 1)).unwrap_or(T::zero())
            - T::from_usize_lossy(n - j) * self.a2.ln();
        self.a4_of(i) * ln.exp()
    }

    /// Mixture weight `w_i`; the weights sum to one.
    pub fn weight(&self, i: usize) -> T {
        let one = T::one();
        let mut w = (self.x_shadow * (one - self.rho).ln()).exp();
        for k in 0..i {
            let k = T::from_usize_lossy(k);
            w = w * (self.x_shadow + k) * self.rho / (k + one);
        }
        w
    }
}

/// Computes the normalization constant `d` and the coefficients `A1..A3`.
pub fn rf_derive<T: Real>(params: &RfParams<T>) -> Result<RfDerived<T>> {
    params.validate()?;
    let RfParams {
        alpha,
        kappa,
        x_shadow: x,
        phi_r,
        ..
    } = *params;
    let mu = params.mu_real();
    let two = T::lit(2.0);
    let half_alpha = alpha / two;
    let mk = mu * kappa;
    let rho = mk / (mk + x);
    let shifted = mu + two / alpha;
    let f21 = hyp2f1(x, shifted, mu, rho)?;
    // d = [(μκ + x)^x Γ(μ) / (x^x Γ(μ + 2/α) 2F1(x, μ + 2/α; μ; ρ))]^{α/2}
    let ln_inner = x * (mk / x).ln_1p() + ln_gamma(mu)? - ln_gamma(shifted)? - f21.ln();
    let ln_d = half_alpha * ln_inner;
    let d_const = ln_d.exp();
    let ln_phi = phi_r.ln();
    let a2 = (-ln_d - half_alpha * ln_phi).exp();
    let a3 = rho * a2;
    // A1 = x^x α φ^{-αμ/2} / (2 d^μ Γ(μ) (μκ + x)^x) = (1-ρ)^x (α/2) A2^μ / Γ(μ)
    let ln_a1 = x * (-rho).ln_1p() + half_alpha.ln() + mu * a2.ln() - ln_gamma(mu)?;
    Ok(RfDerived {
        d_const,
        a1: ln_a1.exp(),
        a2,
        a3,
        rho,
        alpha,
        mu: params.mu,
        x_shadow: x,
    })
}

/// Ratio test bound: once the weight ratio has dropped below one, the tail
/// after term `i` is at most `next / (1 - r_sup)`.
fn tail_bound<T: Real>(next: T, ratio: T, rho: T) -> Option<T> {
    let r_sup = ratio.max(rho);
    (r_sup < T::one()).then(|| next / (T::one() - r_sup))
}

/// Density of the S–R SNR at `gamma > 0`.
pub fn rf_pdf<T: Real>(params: &RfParams<T>, gamma: T) -> Result<T> {
    let der = rf_derive(params)?;
    rf_pdf_with(&der, gamma)
}

/// Density from precomputed constants.
pub fn rf_pdf_with<T: Real>(der: &RfDerived<T>, gamma: T) -> Result<T> {
    if !(gamma >= T::zero()) {
        return Err(Error::Domain(format!("gamma must be >= 0, got {gamma}")));
    }
    if gamma == T::zero() {
        let exponent = der.alpha * T::from_u32(der.mu).unwrap() / T::lit(2.0) - T::one();
        return Ok(if exponent > T::zero() {
            T::zero()
        } else if exponent == T::zero() {
            der.a1
        } else {
            T::infinity()
        });
    }
    let y = gamma.powf(der.alpha / T::lit(2.0));
    let z = der.a3 * y;
    let mu = T::from_u32(der.mu).unwrap();
    let ln_f11 = match ln_hyp1f1(der.x_shadow, mu, z) {
        Ok(v) => v,
        Err(_) => return rf_pdf_series_with(der, gamma, DEFAULT_I_MAX),
    };
    let ln = der.a1.ln() + (der.alpha * mu / T::lit(2.0) - T::one()) * gamma.ln() - der.a2 * y + ln_f11;
    Ok(ln.exp())
}

/// Density summed as a mixture of generalized-gamma densities.
pub fn rf_pdf_series<T: Real>(params: &RfParams<T>, gamma: T, i_max: usize) -> Result<T> {
    let der = rf_derive(params)?;
    rf_pdf_series_with(&der, gamma, i_max)
}

fn rf_pdf_series_with<T: Real>(der: &RfDerived<T>, gamma: T, i_max: usize) -> Result<T> {
    let half_alpha = der.alpha / T::lit(2.0);
    let y = gamma.powf(half_alpha);
    let z = der.a2 * y;
    let ln_z = z.ln();
    // f_i(γ) = (α/2) z^{μ+i} e^{-z} / (γ Γ(μ+i))
    let component = |n: usize| -> T {
        let nf = T::from_usize_lossy(n);
        (half_alpha.ln() + nf * ln_z - z - gamma.ln() - ln_gamma(nf).unwrap()).exp()
    };
    // components rise until μ + i - 1 reaches z and fall afterwards
    let peak = component(z.floor().to_usize().unwrap_or(usize::MAX - 1).saturating_add(1).max(1));
    mixture_sum(der, i_max, |i| component(der.mu as usize + i), |i, next| {
        let n = der.mu as usize + i + 1;
        let sup = if T::from_usize_lossy(n - 1) < z { peak } else { component(n) };
        next * sup
    })
}

/// Sums `Σ w_i g(i)` with `g` bounded by `bound(i, w_{i+1})` for all later
/// terms, stopping once the bound falls below the relative tolerance.
fn mixture_sum<T: Real>(
    der: &RfDerived<T>,
    i_max: usize,
    mut g: impl FnMut(usize) -> T,
    mut bound: impl FnMut(usize, T) -> T,
) -> Result<T> {
    let one = T::one();
    let mut w = der.weight(0);
    let mut acc = w * g(0);
    if der.rho == T::zero() {
        return Ok(acc);
    }
    let mut last_bound = T::infinity();
    for i in 0..i_max {
        let fi = T::from_usize_lossy(i);
        let ratio = (der.x_shadow + fi) * der.rho / (fi + one);
        let next = w * ratio;
        if let Some(tail) = tail_bound(next, ratio, der.rho) {
            last_bound = bound(i, tail);
            if last_bound <= T::lit(SERIES_TOL) * acc.abs() || last_bound < T::min_positive_value() {
                return Ok(acc);
            }
        }
        w = next;
        acc = acc + w * g(i + 1);
    }
    Err(Error::Truncation {
        terms: i_max,
        tail_bound: last_bound.as_f64(),
    })
}

/// Regularized lower incomplete gamma `P(n, z)` for integer `n >= 1`.
pub fn gamma_p_int<T: Real>(n: usize, z: T) -> T {
    if z <= T::zero() {
        return T::zero();
    }
    let nf = T::from_usize_lossy(n);
    let ln_lead = nf * z.ln() - z - ln_gamma(nf + T::one()).unwrap();
    if z < nf + T::one() {
        // P = e^{-z} z^n / n! Σ_k z^k / ((n+1)...(n+k))
        let mut term = T::one();
        let mut sum = T::one();
        let mut k = 1;
        while term > T::epsilon() * sum && k < 10_000 {
            term = term * z / (nf + T::from_usize_lossy(k));
            sum = sum + term;
            k += 1;
        }
        (ln_lead.exp() * sum).min(T::one())
    } else {
        // Q = e^{-z} Σ_{j<n} z^j / j!, summed downward from the largest term
        let mut term = T::one();
        let mut sum = T::zero();
        for j in (0..n).rev() {
            sum = sum + term;
            term = term * T::from_usize_lossy(j) / z;
        }
        let q = (ln_lead + (nf / z).ln()).exp() * sum;
        (T::one() - q).max(T::zero())
    }
}

/// CDF of the S–R SNR. `i_max` caps the number of mixture terms.
pub fn rf_cdf<T: Real>(params: &RfParams<T>, gamma: T, i_max: usize) -> Result<T> {
    let der = rf_derive(params)?;
    rf_cdf_with(&der, gamma, i_max)
}

/// CDF from precomputed constants.
pub fn rf_cdf_with<T: Real>(der: &RfDerived<T>, gamma: T, i_max: usize) -> Result<T> {
    if !(gamma >= T::zero()) {
        return Err(Error::Domain(format!("gamma must be >= 0, got {gamma}")));
    }
    if gamma == T::zero() {
        return Ok(T::zero());
    }
    let z = der.a2 * gamma.powf(der.alpha / T::lit(2.0));
    let mu = der.mu as usize;
    let v = mixture_sum(der, i_max, |i| gamma_p_int(mu + i, z), |i, tail| tail * gamma_p_int(mu + i + 1, z))?;
    Ok(v.min(T::one()).max(T::zero()))
}

/// CDF through the literal double sum `1 - (2A1/α) Σ_i Σ_j A5(i,j) y^j e^{-A2 y}`
/// over a fixed number of `i` terms.
pub fn rf_cdf_double_sum<T: Real>(params: &RfParams<T>, gamma: T, terms: usize) -> Result<T> {
    let der = rf_derive(params)?;
    let y = gamma.powf(der.alpha / T::lit(2.0));
    let e = (-der.a2 * y).exp();
    let mut s = T::zero();
    for i in 0..terms {
        for j in 0..(der.mu as usize + i) {
            s = s + der.a5_of(i, j) * y.powi(j as i32) * e;
        }
    }
    Ok(T::one() - T::lit(2.0) * der.a1 / der.alpha * s)
}

/// Generative sampler: shadowed line-of-sight clusters with Gaussian
/// scattering, raised to the power `2/α` and calibrated to mean `φ_r`.
#[derive(Debug, Clone)]
pub struct RfSampler {
    mu: u32,
    los: f64,
    scale: f64,
    exponent: f64,
    shadow: Gamma<f64>,
    scatter: Normal<f64>,
}

impl RfSampler {
    pub fn new<T: Real>(params: &RfParams<T>) -> Result<Self> {
        let der = rf_derive(params)?;
        let x = params.x_shadow.as_f64();
        let shadow = Gamma::new(x, 1.0 / x).map_err(|e| invalid("x_shadow", e.to_string()))?;
        let scatter = Normal::new(0.0, std::f64::consts::FRAC_1_SQRT_2).expect("valid normal");
        let exponent = 2.0 / params.alpha.as_f64();
        Ok(Self {
            mu: params.mu,
            los: params.kappa.as_f64().sqrt(),
            // γ = φ_r (d S)^{2/α}
            scale: params.phi_r.as_f64() * der.d_const.as_f64().powf(exponent),
            exponent,
            shadow,
            scatter,
        })
    }

    /// Draws the cluster power `S`, whose mean is `μ(1 + κ)`.
    pub fn power<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let xi = self.shadow.sample(rng).sqrt();
        let dominant = xi * self.los;
        (0..self.mu)
            .map(|_| {
                let i = self.scatter.sample(rng) + dominant;
                let q = self.scatter.sample(rng);
                i * i + q * q
            })
            .sum()
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        self.scale * self.power(rng).powf(self.exponent)
    }
}

/// Draws `n` SNR samples.
pub fn rf_sample<T: Real, R: Rng + ?Sized>(params: &RfParams<T>, rng: &mut R, n: usize) -> Result<Vec<T>> {
    if n == 0 {
        return Err(invalid("n", "must be >= 1"));
    }
    let s = RfSampler::new(params)?;
    Ok((0..n).map(|_| T::lit(s.sample(rng))).collect())
}
