//! The Málaga turbulence FSO link with zero-boresight pointing error.
//!
//! The per-`q` weight `Z1 h_q` is stored in the simplified form
//!
//! ```text
//! Z1 h_q = 2^{1-s} ε² / Γ(a) · C(b-1, q-1) (r b)^{b-q} ζ_t^{q-1} / ((q-1)! (r b + ζ_t)^{b-1})
//! ```
//!
//! which is algebraically the product of the two factors but stays finite
//! at `r = 0` (only `q = b` survives) and at `ζ_t = 0` (only `q = 1`).

use rand::Rng;
use rand_distr::{Distribution, Gamma, Normal, Uniform};

use crate::error::{invalid, Error, Result};
use crate::scalar::Real;
use crate::specfun::{ln_factorial, ln_gamma, ln_gamma_signed, meijer_g, MeijerGSpec};

/// Detection technique at the FSO receiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Detection {
    /// Heterodyne detection, `s = 1`.
    Heterodyne,
    /// Intensity modulation with direct detection, `s = 2`.
    IntensityModulation,
}

impl Detection {
    pub fn from_s(s: u32) -> Result<Self> {
        match s {
            1 => Ok(Self::Heterodyne),
            2 => Ok(Self::IntensityModulation),
            _ => Err(invalid("s", format!("detection type must be 1 or 2, got {s}"))),
        }
    }

    pub fn s(self) -> usize {
        match self {
            Self::Heterodyne => 1,
            Self::IntensityModulation => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FsoParams<T> {
    pub a: T,
    pub b: u32,
    pub eps: T,
    pub detection: Detection,
    pub r_scatter: T,
    pub zeta_t: T,
    /// Electrical SNR, linear scale.
    pub u_elec: T,
}

impl<T: Real> FsoParams<T> {
    /// Validates and builds a parameter set. `b` is given as a real so
    /// that non-integral values can be rejected with a clear message.
    pub fn new(a: T, b: T, eps: T, s: u32, r_scatter: T, zeta_t: T, u_elec: T) -> Result<Self> {
        if !(b >= T::one()) || b.fract() != T::zero() || !b.is_finite() {
            return Err(invalid("b", format!("must be a positive integer, got {b}")));
        }
        let p = Self {
            a,
            b: b.to_u32().ok_or_else(|| invalid("b", "too large"))?,
            eps,
            detection: Detection::from_s(s)?,
            r_scatter,
            zeta_t,
            u_elec,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let pos = |v: T| v > T::zero() && v.is_finite();
        if !pos(self.a) {
            return Err(invalid("a", format!("must be > 0, got {}", self.a)));
        }
        if self.b == 0 {
            return Err(invalid("b", "must be a positive integer"));
        }
        if !pos(self.eps) {
            return Err(invalid("eps", format!("must be > 0, got {}", self.eps)));
        }
        if !(self.r_scatter >= T::zero()) || !self.r_scatter.is_finite() {
            return Err(invalid("r_scatter", format!("must be >= 0, got {}", self.r_scatter)));
        }
        if !(self.zeta_t >= T::zero()) || !self.zeta_t.is_finite() {
            return Err(invalid("zeta_t", format!("must be >= 0, got {}", self.zeta_t)));
        }
        if !(self.r_scatter + self.zeta_t > T::zero()) {
            return Err(invalid("r_scatter/zeta_t", "r_scatter + zeta_t must be > 0"));
        }
        if !pos(self.u_elec) {
            return Err(invalid("u_elec", format!("must be > 0, got {}", self.u_elec)));
        }
        Ok(())
    }

    pub fn s(&self) -> usize {
        self.detection.s()
    }

    fn eps2(&self) -> T {
        self.eps * self.eps
    }

    fn b_real(&self) -> T {
        T::from_u32(self.b).unwrap()
    }
}

/// LOS power `ζ` and coherent power `ζ_t` from the scattering micro-parameters.
pub fn fso_zeta_t<T: Real>(h0: T, rho: T, theta_x: T, theta_y: T) -> Result<(T, T)> {
    if !(rho >= T::zero() && rho <= T::one()) {
        return Err(Error::Domain(format!("rho must lie in [0, 1], got {rho}")));
    }
    if !(h0 >= T::zero()) {
        return Err(Error::Domain(format!("h0 must be >= 0, got {h0}")));
    }
    let two = T::lit(2.0);
    let zeta = two * h0 * (T::one() - rho);
    let zeta_t = zeta + two * h0 * rho + (two * h0 * rho * zeta).sqrt() * (theta_x - theta_y).cos();
    Ok((zeta, zeta_t))
}

/// Electrical SNR `U` for average SNR `phi`; `params.u_elec` is ignored.
pub fn fso_electrical_snr<T: Real>(params: &FsoParams<T>, phi: T) -> T {
    match params.detection {
        Detection::Heterodyne => phi,
        Detection::IntensityModulation => {
            let one = T::one();
            let two = T::lit(2.0);
            let e2 = params.eps2();
            let (a, r, z) = (params.a, params.r_scatter, params.zeta_t);
            let num = a * e2 * (e2 + two) * (r + z);
            let den = (e2 + one).powi(2) * (a + one) * (two * r * (r + two * z) + z * z * (one + one / params.b_real()));
            num / den * phi
        }
    }
}

/// Constants of the Meijer-G density and CDF.
#[derive(Debug, Clone, PartialEq)]
pub struct FsoDerived<T> {
    pub z2: T,
    pub z4: T,
    /// `Z1 h_q` for `q = 1..=b` (index `q - 1`).
    pub pdf_weights: Vec<T>,
    /// `Z3 w_q` for `q = 1..=b` (index `q - 1`).
    pub cdf_weights: Vec<T>,
    /// `{(ε²+1)/s, ..., (ε²+s)/s}`.
    pub l1: Vec<T>,
    params: FsoParams<T>,
}

impl<T: Real> FsoDerived<T> {
    pub fn params(&self) -> &FsoParams<T> {
        &self.params
    }

    /// `{ε²/s, ..., (ε²+s-1)/s, a/s, ..., (a+s-1)/s, q/s, ..., (q+s-1)/s}`.
    pub fn l2_of(&self, q: usize) -> Vec<T> {
        let s = self.params.s();
        let sf = T::from_usize_lossy(s);
        let q = T::from_usize_lossy(q);
        [self.params.eps2(), self.params.a, q]
            .iter()
            .flat_map(|&base| (0..s).map(move |i| (base + T::from_usize_lossy(i)) / sf))
            .collect()
    }

    /// `Z1` in the unsimplified form; `None` when `r = 0`, where it diverges.
    pub fn z1(&self) -> Option<T> {
        let p = &self.params;
        let r = p.r_scatter;
        if r == T::zero() {
            return None;
        }
        let (a, b, z, e2) = (p.a, p.b_real(), p.zeta_t, p.eps2());
        let two = T::lit(2.0);
        let s = T::from_usize_lossy(p.s());
        let ln = (T::one() - s) * two.ln() + e2.ln() + a / two * a.ln() - (T::one() + a / two) * r.ln()
            - ln_gamma(a).ok()?
            + (b + a / two) * (r * b / (r * b + z)).ln();
        Some(ln.exp())
    }

    /// `j_q` in the unsimplified form; `None` when `r = 0`.
    pub fn j_of(&self, q: usize) -> Option<T> {
        let p = &self.params;
        let r = p.r_scatter;
        if r == T::zero() || q == 0 || q > p.b as usize {
            return None;
        }
        let (a, b, z) = (p.a, p.b_real(), p.zeta_t);
        let two = T::lit(2.0);
        let qf = T::from_usize_lossy(q);
        let binom = ln_factorial::<T>(p.b as usize - 1) - ln_factorial::<T>(q - 1) - ln_factorial::<T>(p.b as usize - q);
        let ln = binom + (T::one() - qf / two) * (r * b + z).ln() - ln_factorial::<T>(q - 1) + qf / two * (a / b).ln();
        Some(ln.exp() * (z / r).powi(q as i32 - 1))
    }

    /// `h_q = j_q (ab / (rb + ζ_t))^{-(a+q)/2}`; `None` when `r = 0`.
    pub fn h_of(&self, q: usize) -> Option<T> {
        let p = &self.params;
        let qf = T::from_usize_lossy(q);
        let base = p.a * p.b_real() / (p.r_scatter * p.b_real() + p.zeta_t);
        self.j_of(q).map(|j| j * base.powf(-(p.a + qf) / T::lit(2.0)))
    }

    /// `w_q = h_q s^{a+q-1}`; `None` when `r = 0`.
    pub fn w_of(&self, q: usize) -> Option<T> {
        let p = &self.params;
        let s = T::from_usize_lossy(p.s());
        self.h_of(q).map(|h| h * s.powf(p.a + T::from_usize_lossy(q) - T::one()))
    }

    /// `Z3 = Z1 / (2π)^{s-1}`; `None` when `r = 0`.
    pub fn z3(&self) -> Option<T> {
        let s = self.params.s() as i32;
        self.z1().map(|z1| z1 / T::TAU().powi(s - 1))
    }

    /// The `q`-th density kernel `G^{3,0}_{1,3}[· | ε²+1; ε², a, q]`.
    pub fn pdf_kernel(&self, q: usize) -> MeijerGSpec<T> {
        let e2 = self.params.eps2();
        MeijerGSpec::new(3, 0, vec![e2 + T::one()], vec![e2, self.params.a, T::from_usize_lossy(q)])
            .expect("density kernel parameters are always admissible")
    }

    /// The `q`-th CDF kernel `G^{3s,1}_{s+1,3s+1}[· | 1, l1; l2, 0]`.
    pub fn cdf_kernel(&self, q: usize) -> Result<MeijerGSpec<T>> {
        let s = self.params.s();
        let mut a = vec![T::one()];
        a.extend(self.l1.iter().copied());
        let mut b = self.l2_of(q);
        b.push(T::zero());
        MeijerGSpec::new(3 * s, 1, a, b)
    }
}

fn ln_binom<T: Real>(n: usize, k: usize) -> T {
    ln_factorial::<T>(n) - ln_factorial::<T>(k) - ln_factorial::<T>(n - k)
}

/// Computes the coefficient tables.
pub fn fso_derive<T: Real>(params: &FsoParams<T>) -> Result<FsoDerived<T>> {
    params.validate()?;
    let p = *params;
    let (a, r, z, e2) = (p.a, p.r_scatter, p.zeta_t, p.eps2());
    let b = p.b as usize;
    let bf = p.b_real();
    let s = p.s();
    let sf = T::from_usize_lossy(s);
    let one = T::one();
    let two = T::lit(2.0);
    let rb = r * bf;

    let z2 = e2 * a * bf * (r + z) / ((e2 + one) * (rb + z));
    let z4 = z2.powi(s as i32) / sf.powi(2 * s as i32);
    let ln_lead = (one - sf) * two.ln() + e2.ln() - ln_gamma(a)? - (bf - one) * (rb + z).ln();

    let mut pdf_weights = Vec::with_capacity(b);
    let mut cdf_weights = Vec::with_capacity(b);
    for q in 1..=b {
        let qf = T::from_usize_lossy(q);
        // zero powers of r b or ζ_t kill all but one q
        let rb_pow = if b == q {
            Some(T::zero())
        } else if rb > T::zero() {
            Some((bf - qf) * rb.ln())
        } else {
            None
        };
        let z_pow = if q == 1 {
            Some(T::zero())
        } else if z > T::zero() {
            Some((qf - one) * z.ln())
        } else {
            None
        };
        let w = match (rb_pow, z_pow) {
            (Some(x), Some(y)) => (ln_lead + ln_binom::<T>(b - 1, q - 1) + x + y - ln_factorial::<T>(q - 1)).exp(),
            _ => T::zero(),
        };
        pdf_weights.push(w);
        cdf_weights.push(w * sf.powf(a + qf - one) / T::TAU().powi(s as i32 - 1));
    }
    let l1 = (1..=s).map(|i| (e2 + T::from_usize_lossy(i)) / sf).collect();
    Ok(FsoDerived {
        z2,
        z4,
        pdf_weights,
        cdf_weights,
        l1,
        params: p,
    })
}

/// Density of the R–D (or R–E) SNR at `gamma > 0`.
pub fn fso_pdf<T: Real>(params: &FsoParams<T>, gamma: T) -> Result<T> {
    fso_pdf_with(&fso_derive(params)?, gamma)
}

/// Density from precomputed constants.
pub fn fso_pdf_with<T: Real>(der: &FsoDerived<T>, gamma: T) -> Result<T> {
    if !(gamma > T::zero()) {
        return Err(Error::Domain(format!("gamma must be > 0, got {gamma}")));
    }
    let p = &der.params;
    let s = T::from_usize_lossy(p.s());
    let ln_arg = der.z2.ln() + (gamma.ln() - p.u_elec.ln()) / s;
    let arg = ln_arg.exp();
    let mut total = T::zero();
    for (i, &w) in der.pdf_weights.iter().enumerate() {
        if w == T::zero() {
            continue;
        }
        let spec = der.pdf_kernel(i + 1);
        let g = if arg > T::min_positive_value() {
            meijer_g(&spec, arg)?
        } else {
            leading_small_argument(&spec, ln_arg)
        };
        total = total + w * g;
    }
    Ok((total / gamma).max(T::zero()))
}

/// Leading small-argument behaviour of `G^{m,0}_{p,q}`: the residue at the
/// smallest lower parameter, evaluated in log space.
fn leading_small_argument<T: Real>(spec: &MeijerGSpec<T>, ln_x: T) -> T {
    let m = spec.m();
    let (h, &bh) = spec.b()[..m]
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.partial_cmp(y.1).unwrap())
        .expect("m >= 1");
    let mut ln = bh * ln_x;
    let mut sign = T::one();
    for (j, &bj) in spec.b().iter().enumerate() {
        if j == h {
            continue;
        }
        let g = ln_gamma_signed(if j < m { bj - bh } else { T::one() - bj + bh });
        if j < m {
            ln = ln + g.ln_abs;
        } else {
            ln = ln - g.ln_abs;
        }
        sign = sign * g.sign;
    }
    for &aj in &spec.a()[spec.n()..] {
        let g = ln_gamma_signed(aj - bh);
        ln = ln - g.ln_abs;
        sign = sign * g.sign;
    }
    sign * ln.exp()
}

/// CDF of the FSO SNR.
pub fn fso_cdf<T: Real>(params: &FsoParams<T>, gamma: T) -> Result<T> {
    fso_cdf_with(&fso_derive(params)?, gamma)
}

/// CDF from precomputed constants.
pub fn fso_cdf_with<T: Real>(der: &FsoDerived<T>, gamma: T) -> Result<T> {
    if !(gamma >= T::zero()) {
        return Err(Error::Domain(format!("gamma must be >= 0, got {gamma}")));
    }
    if gamma == T::zero() {
        return Ok(T::zero());
    }
    let arg = (der.z4.ln() - der.params.u_elec.ln() + gamma.ln()).exp();
    if arg == T::zero() {
        return Ok(T::zero());
    }
    let mut total = T::zero();
    for (i, &w) in der.cdf_weights.iter().enumerate() {
        if w == T::zero() {
            continue;
        }
        total = total + w * meijer_g(&der.cdf_kernel(i + 1)?, arg)?;
    }
    Ok(total.max(T::zero()).min(T::one()))
}

/// Mean irradiance `E[X Y h_p] = ε²(r + ζ_t)/(ε² + 1)` of the generative model,
/// used as the normalization `I0`.
pub fn mean_irradiance<T: Real>(params: &FsoParams<T>) -> T {
    let e2 = params.eps2();
    e2 * (params.r_scatter + params.zeta_t) / (e2 + T::one())
}

/// Generative sampler: gamma-distributed large-scale fading times a
/// shadowed Rician small-scale term times the pointing-error factor.
#[derive(Debug, Clone)]
pub struct FsoSampler {
    large: Gamma<f64>,
    los: Option<Gamma<f64>>,
    scatter: Option<Normal<f64>>,
    phase: Uniform<f64>,
    inv_eps2: f64,
    i0: f64,
    u: f64,
    s: i32,
}

impl FsoSampler {
    pub fn new<T: Real>(params: &FsoParams<T>) -> Result<Self> {
        params.validate()?;
        let a = params.a.as_f64();
        let b = params.b as f64;
        let z = params.zeta_t.as_f64();
        let r = params.r_scatter.as_f64();
        let e2 = params.eps2().as_f64();
        let large = Gamma::new(a, 1.0 / a).map_err(|e| invalid("a", e.to_string()))?;
        let los = if z > 0.0 {
            Some(Gamma::new(b, z / b).map_err(|e| invalid("zeta_t", e.to_string()))?)
        } else {
            None
        };
        let scatter = if r > 0.0 {
            Some(Normal::new(0.0, (r / 2.0).sqrt()).map_err(|e| invalid("r_scatter", e.to_string()))?)
        } else {
            None
        };
        Ok(Self {
            large,
            los,
            scatter,
            phase: Uniform::new(0.0, std::f64::consts::TAU).expect("valid range"),
            inv_eps2: 1.0 / e2,
            i0: mean_irradiance(params).as_f64(),
            u: params.u_elec.as_f64(),
            s: params.s() as i32,
        })
    }

    /// Draws the normalized irradiance `I / I0`, whose mean is one.
    pub fn irradiance<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let x = self.large.sample(rng);
        let (mut re, mut im) = match &self.los {
            Some(g) => {
                let amp = g.sample(rng).sqrt();
                let th = self.phase.sample(rng);
                (amp * th.cos(), amp * th.sin())
            }
            None => (0.0, 0.0),
        };
        if let Some(n) = &self.scatter {
            re += n.sample(rng);
            im += n.sample(rng);
        }
        let y = re * re + im * im;
        let u: f64 = rng.random();
        let hp = u.powf(self.inv_eps2);
        x * y * hp / self.i0
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        self.u * self.irradiance(rng).powi(self.s)
    }
}

/// Draws `n` SNR samples.
pub fn fso_sample<T: Real, R: Rng + ?Sized>(params: &FsoParams<T>, rng: &mut R, n: usize) -> Result<Vec<T>> {
    if n == 0 {
        return Err(invalid("n", "must be >= 1"));
    }
    let s = FsoSampler::new(params)?;
    Ok((0..n).map(|_| T::lit(s.sample(rng))).collect())
}
