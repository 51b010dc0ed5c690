//! Secrecy metrics of the mixed RF/FSO relay link: lower-bound secrecy
//! outage probability, probability of strictly positive secrecy capacity
//! and intercept probability, each in closed form, as a high-SNR expansion
//! and as a quadrature oracle.
//!
//! With `P(x) = Pr{γ_d < x γ_e}` the closed forms are
//!
//! ```text
//! IP    = P(1)
//! SPSC  = 1 - P(1)
//! SOP_L = F_r(φ - 1) + (1 - F_r(φ - 1)) P(φ)
//! ```
//!
//! where `P(x) = Σ_{q_d, q_e} (B3 w_{q_d}) (C3 w_{q_e}) G[C4 U_d / (B4 x U_e)]` and
//! `1 - F_r(φ - 1)` is the double sum of the `ℜ` coefficients.

use crate::error::{invalid, Error, Result};
use crate::fso_channel::{fso_cdf_with, fso_derive, fso_pdf_with, FsoDerived, FsoParams};
use crate::quad::integrate_positive;
use crate::rf_channel::{rf_cdf_with, rf_derive, RfDerived, RfParams, DEFAULT_I_MAX};
use crate::scalar::{near_int, Real};
use crate::specfun::{ln_gamma_signed, meijer_g, MeijerGSpec, PERTURBATION};

/// Tolerance of the quadrature oracles.
pub const QUAD_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioConfig<T> {
    pub rf: RfParams<T>,
    pub fso_d: FsoParams<T>,
    pub fso_e: FsoParams<T>,
    /// Target secrecy rate in bits/s/Hz.
    pub target_rate: T,
}

impl<T: Real> ScenarioConfig<T> {
    pub fn new(rf: RfParams<T>, fso_d: FsoParams<T>, fso_e: FsoParams<T>, target_rate: T) -> Result<Self> {
        let c = Self {
            rf,
            fso_d,
            fso_e,
            target_rate,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        self.rf.validate()?;
        self.fso_d.validate()?;
        self.fso_e.validate()?;
        if !(self.target_rate >= T::zero()) || !self.target_rate.is_finite() {
            return Err(invalid("target_rate", format!("must be >= 0, got {}", self.target_rate)));
        }
        Ok(())
    }

    /// `φ = 2^{2 T_c}`.
    pub fn phi(&self) -> T {
        (T::lit(2.0) * self.target_rate * T::LN_2()).exp()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    Asymptotic,
    QuadratureOracle,
    MonteCarlo,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecrecyResult<T> {
    pub value: T,
    pub method: Method,
    /// Standard error (Monte Carlo), truncation bound (series) or
    /// quadrature error estimate.
    pub error_estimate: T,
    /// False when an asymptotic value has left `[0, 1]`.
    pub in_range: bool,
}

impl<T: Real> SecrecyResult<T> {
    fn new(value: T, method: Method, error_estimate: T) -> Self {
        Self {
            value,
            method,
            error_estimate,
            in_range: value >= T::zero() && value <= T::one(),
        }
    }
}

/// Parameters of the high-SNR expansion for one `(q_d, q_e)` pair.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticTerms<T> {
    /// `s_M = s_e + 3 s_d`.
    pub s_m: usize,
    /// `s_E = 3 s_e + s_d`.
    pub s_e: usize,
    /// `(1 - l_{d2}, 1, l_{e1})`, length `s_M + 1`.
    pub l1: Vec<T>,
    /// `(l_{e2}, 0, 1 - l_{d1})`, length `s_E + 1`.
    pub l2: Vec<T>,
    m: usize,
    n: usize,
}

impl<T: Real> AsymptoticTerms<T> {
    pub fn new(d: &FsoDerived<T>, e: &FsoDerived<T>, q_d: usize, q_e: usize) -> Self {
        let (sd, se) = (d.params().s(), e.params().s());
        let mut l1: Vec<T> = d.l2_of(q_d).into_iter().map(|v| T::one() - v).collect();
        l1.push(T::one());
        l1.extend(e.l1.iter().copied());
        let mut l2 = e.l2_of(q_e);
        l2.push(T::zero());
        l2.extend(d.l1.iter().map(|&v| T::one() - v));
        Self {
            s_m: se + 3 * sd,
            s_e: 3 * se + sd,
            l1,
            l2,
            m: 3 * se + 1,
            n: 3 * sd,
        }
    }

    /// The Meijer G instance `G^{3s_e+1, 3s_d}_{s_M+1, s_E+1}[· | L1; L2]`.
    pub fn kernel(&self) -> Result<MeijerGSpec<T>> {
        MeijerGSpec::new(self.m, self.n, self.l1.clone(), self.l2.clone())
    }

    /// Number of terms in the expansion, `3 s_d`.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Shared, precomputed state of a scenario.
#[derive(Debug, Clone)]
pub struct Prepared<T> {
    pub cfg: ScenarioConfig<T>,
    pub rf: RfDerived<T>,
    pub d: FsoDerived<T>,
    pub e: FsoDerived<T>,
}

impl<T: Real> Prepared<T> {
    pub fn new(cfg: &ScenarioConfig<T>) -> Result<Self> {
        cfg.validate()?;
        Ok(Self {
            cfg: *cfg,
            rf: rf_derive(&cfg.rf)?,
            d: fso_derive(&cfg.fso_d)?,
            e: fso_derive(&cfg.fso_e)?,
        })
    }

    /// Argument `C4 U_d / (B4 x U_e)` of the metric kernels.
    fn argument(&self, x: T) -> T {
        (self.e.z4.ln() + self.cfg.fso_d.u_elec.ln() - self.d.z4.ln() - x.ln() - self.cfg.fso_e.u_elec.ln()).exp()
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize, T)> + '_ {
        let d = &self.d.cdf_weights;
        let e = &self.e.cdf_weights;
        (0..d.len()).flat_map(move |i| {
            (0..e.len()).filter_map(move |j| {
                let w = d[i] * e[j];
                (w != T::zero()).then_some((i + 1, j + 1, w))
            })
        })
    }

    /// `Pr{γ_d < x γ_e}` in closed form.
    pub fn ratio_probability(&self, x: T) -> Result<T> {
        let arg = self.argument(x);
        let mut total = T::zero();
        for (qd, qe, w) in self.pairs() {
            let spec = AsymptoticTerms::new(&self.d, &self.e, qd, qe).kernel()?;
            total = total + w * meijer_g(&spec, arg)?;
        }
        Ok(total)
    }

    /// High-SNR expansion of `Pr{γ_d < x γ_e}`.
    pub fn ratio_probability_asymptotic(&self, x: T) -> Result<T> {
        let arg = self.argument(x);
        let mut total = T::zero();
        for (qd, qe, w) in self.pairs() {
            let spec = AsymptoticTerms::new(&self.d, &self.e, qd, qe).kernel()?;
            total = total + w * leading_large_argument(&spec, arg);
        }
        Ok(total)
    }

    /// `F_r(φ - 1)`, the probability that the RF hop alone is in outage.
    pub fn relay_outage(&self) -> Result<T> {
        rf_cdf_with(&self.rf, self.cfg.phi() - T::one(), DEFAULT_I_MAX)
    }
}

/// `Σ_p` of the residues at the leading pole of each `Γ(1 - a_p + s)`,
/// `p <= n`: the large-argument expansion
///
/// ```text
/// Σ_p Π_{l≠p, l≤n} Γ(a_p - a_l) Π_{l≤m} Γ(1 + b_l - a_p)
///     / (Π_{l>n} Γ(1 + a_l - a_p) Π_{l>m} Γ(a_p - b_l)) · x^{a_p - 1}
/// ```
///
/// Upper parameters an integer apart make individual terms singular; they
/// are offset by `±PERTURBATION` and the two evaluations averaged, which
/// cancels the pole parts and keeps the logarithmic term.
pub fn leading_large_argument<T: Real>(spec: &MeijerGSpec<T>, x: T) -> T {
    let n = spec.n();
    let a = spec.a();
    let mut shift = vec![0usize; n];
    let mut seen = vec![false; n];
    for i in 0..n {
        if seen[i] {
            continue;
        }
        seen[i] = true;
        let mut k = 1;
        for j in (i + 1)..n {
            if !seen[j] && near_int(a[j] - a[i], T::lit(1e-9)) {
                seen[j] = true;
                shift[j] = k;
                k += 1;
            }
        }
    }
    if shift.iter().all(|&k| k == 0) {
        return leading_terms(spec, a, x);
    }
    let delta = T::lit(PERTURBATION);
    let mut sum = T::zero();
    for sign in [T::one(), -T::one()] {
        let mut shifted = a.to_vec();
        for (v, &k) in shifted.iter_mut().zip(&shift) {
            *v = *v + sign * delta * T::from_usize_lossy(k);
        }
        sum = sum + leading_terms(spec, &shifted, x);
    }
    sum * T::lit(0.5)
}

fn leading_terms<T: Real>(spec: &MeijerGSpec<T>, a: &[T], x: T) -> T {
    let (m, n) = (spec.m(), spec.n());
    let b = spec.b();
    let ln_x = x.ln();
    let mut total = T::zero();
    for p in 0..n {
        let ap = a[p];
        let numer = a[..n]
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != p)
            .map(|(_, &al)| ap - al)
            .chain(b[..m].iter().map(|&bl| T::one() + bl - ap));
        let denom = a[n..].iter().map(|&al| T::one() + al - ap).chain(b[m..].iter().map(|&bl| ap - bl));
        let mut ln = (ap - T::one()) * ln_x;
        let mut sign = T::one();
        for z in numer {
            let g = ln_gamma_signed(z);
            ln = ln + g.ln_abs;
            sign = sign * g.sign;
        }
        let mut zero = false;
        for z in denom {
            let g = ln_gamma_signed(z);
            ln = ln - g.ln_abs;
            sign = sign * g.sign;
            zero |= g.pole_order > 0;
        }
        if !zero {
            total = total + sign * ln.exp();
        }
    }
    total
}

/// Closed-form lower bound of the secrecy outage probability.
pub fn sop_lower<T: Real>(cfg: &ScenarioConfig<T>) -> Result<SecrecyResult<T>> {
    let p = Prepared::new(cfg)?;
    let fr = p.relay_outage()?;
    let pphi = p.ratio_probability(cfg.phi())?;
    let v = fr + (T::one() - fr) * pphi;
    Ok(SecrecyResult::new(v, Method::ClosedForm, T::lit(crate::rf_channel::SERIES_TOL)))
}

/// High-SNR expansion of the lower-bound SOP; not clamped.
pub fn sop_lower_asymptotic<T: Real>(cfg: &ScenarioConfig<T>) -> Result<SecrecyResult<T>> {
    let p = Prepared::new(cfg)?;
    let fr = p.relay_outage()?;
    let pphi = p.ratio_probability_asymptotic(cfg.phi())?;
    Ok(SecrecyResult::new(fr + (T::one() - fr) * pphi, Method::Asymptotic, T::zero()))
}

/// `∫ F_d(x γ + c) f_e(γ) dγ`, i.e. `Pr{γ_d < x γ_e + c}`, by quadrature.
pub fn ratio_probability_quadrature<T: Real>(p: &Prepared<T>, x: T, c: T) -> Result<(T, T)> {
    let mut failure = None;
    let f = |g: T| -> T {
        if failure.is_some() || g <= T::zero() {
            return T::zero();
        }
        let r = fso_pdf_with(&p.e, g).and_then(|pe| {
            if pe == T::zero() {
                Ok(T::zero())
            } else {
                fso_cdf_with(&p.d, x * g + c).map(|fd| fd * pe)
            }
        });
        match r {
            Ok(v) => v,
            Err(e) => {
                failure = Some(e);
                T::zero()
            }
        }
    };
    let q = integrate_positive(f, p.cfg.fso_e.u_elec, T::lit(QUAD_TOL) * T::lit(0.01), T::lit(QUAD_TOL) * T::lit(0.01));
    if let Some(e) = failure {
        return Err(e);
    }
    let q = q?;
    Ok((q.value.min(T::one()).max(T::zero()), q.error))
}

/// Secrecy outage probability without the lower-bound step, by quadrature.
pub fn sop_exact_quadrature<T: Real>(cfg: &ScenarioConfig<T>) -> Result<SecrecyResult<T>> {
    let p = Prepared::new(cfg)?;
    let phi = cfg.phi();
    let fr = p.relay_outage()?;
    let (v, err) = ratio_probability_quadrature(&p, phi, phi - T::one())?;
    Ok(SecrecyResult::new(fr + (T::one() - fr) * v, Method::QuadratureOracle, err))
}

/// Lower-bound SOP with the FSO part evaluated by quadrature.
pub fn sop_lower_quadrature<T: Real>(cfg: &ScenarioConfig<T>) -> Result<SecrecyResult<T>> {
    let p = Prepared::new(cfg)?;
    let fr = p.relay_outage()?;
    let (v, err) = ratio_probability_quadrature(&p, cfg.phi(), T::zero())?;
    Ok(SecrecyResult::new(fr + (T::one() - fr) * v, Method::QuadratureOracle, err))
}

/// Probability of strictly positive secrecy capacity.
pub fn spsc<T: Real>(cfg: &ScenarioConfig<T>) -> Result<SecrecyResult<T>> {
    let v = ip(cfg)?;
    Ok(SecrecyResult::new(T::one() - v.value, Method::ClosedForm, v.error_estimate))
}

/// High-SNR expansion of the SPSC; not clamped.
pub fn spsc_asymptotic<T: Real>(cfg: &ScenarioConfig<T>) -> Result<SecrecyResult<T>> {
    let v = ip_asymptotic(cfg)?;
    Ok(SecrecyResult::new(T::one() - v.value, Method::Asymptotic, T::zero()))
}

/// Intercept probability `Pr{γ_d < γ_e}`.
pub fn ip<T: Real>(cfg: &ScenarioConfig<T>) -> Result<SecrecyResult<T>> {
    let p = Prepared::new(cfg)?;
    let v = p.ratio_probability(T::one())?;
    if !(v > T::lit(-1e-9) && v < T::lit(1.0 + 1e-9)) {
        return Err(Error::Domain(format!("intercept probability {v} outside [0, 1]")));
    }
    Ok(SecrecyResult::new(v, Method::ClosedForm, T::zero()))
}

/// High-SNR expansion of the intercept probability; not clamped.
pub fn ip_asymptotic<T: Real>(cfg: &ScenarioConfig<T>) -> Result<SecrecyResult<T>> {
    let p = Prepared::new(cfg)?;
    let v = p.ratio_probability_asymptotic(T::one())?;
    Ok(SecrecyResult::new(v, Method::Asymptotic, T::zero()))
}

/// Intercept probability by quadrature of `∫ F_d f_e`.
pub fn ip_quadrature<T: Real>(cfg: &ScenarioConfig<T>) -> Result<SecrecyResult<T>> {
    let p = Prepared::new(cfg)?;
    let (v, err) = ratio_probability_quadrature(&p, T::one(), T::zero())?;
    Ok(SecrecyResult::new(v, Method::QuadratureOracle, err))
}

/// SPSC by quadrature.
pub fn spsc_quadrature<T: Real>(cfg: &ScenarioConfig<T>) -> Result<SecrecyResult<T>> {
    let v = ip_quadrature(cfg)?;
    Ok(SecrecyResult::new(T::one() - v.value, Method::QuadratureOracle, v.error_estimate))
}

/// `ℜ(i, j) = (2 A1 / α) A5(i, j) (φ-1)^{αj/2} exp(-A2 (φ-1)^{α/2})`; summed
/// over `i` and `j <= μ + i - 1` these give `1 - F_r(φ - 1)`.
pub fn re_coefficient<T: Real>(rf: &RfDerived<T>, alpha: T, phi: T, i: usize, j: usize) -> T {
    let y = (phi - T::one()).powf(alpha / T::lit(2.0));
    let yj = if j == 0 { T::one() } else { y.powi(j as i32) };
    T::lit(2.0) * rf.a1 / alpha * rf.a5_of(i, j) * yj * (-rf.a2 * y).exp()
}
