//! Event-level Monte Carlo estimates of the secrecy metrics.
//!
//! Every trial draws `(γ_r, γ_d, γ_e)` from a ChaCha8 stream keyed by
//! `(seed, trial index)`, so estimates do not depend on batch size or on
//! how batches are scheduled across threads. Tallies are integer counts.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{invalid, Result};
use crate::fso_channel::FsoSampler;
use crate::metrics::ScenarioConfig;
use crate::rf_channel::RfSampler;
use crate::scalar::Real;

/// Fewest trials for which standard errors are reported.
pub const MIN_TRIALS: u64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    pub n_trials: u64,
    pub seed: u64,
    /// Trials per accumulation batch.
    pub batch: u64,
}

impl Default for McConfig {
    fn default() -> Self {
        Self {
            n_trials: 100_000,
            seed: 0,
            batch: 16_384,
        }
    }
}

impl McConfig {
    pub fn new(n_trials: u64, seed: u64) -> Result<Self> {
        let c = Self {
            n_trials,
            seed,
            ..Self::default()
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_trials < MIN_TRIALS {
            return Err(invalid("n_trials", format!("must be >= {MIN_TRIALS}, got {}", self.n_trials)));
        }
        if self.batch == 0 {
            return Err(invalid("batch", "must be >= 1"));
        }
        Ok(())
    }
}

/// Event counts over a run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub trials: u64,
    pub sop: u64,
    pub sop_lower: u64,
    pub spsc: u64,
    pub ip: u64,
}

impl std::ops::Add for Tally {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self {
            trials: self.trials + o.trials,
            sop: self.sop + o.sop,
            sop_lower: self.sop_lower + o.sop_lower,
            spsc: self.spsc + o.spsc,
            ip: self.ip + o.ip,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub sop_hat: f64,
    pub sop_lower_hat: f64,
    pub spsc_hat: f64,
    pub ip_hat: f64,
    pub se_sop: f64,
    pub se_sop_lower: f64,
    pub se_spsc: f64,
    pub se_ip: f64,
    pub tally: Tally,
}

impl McEstimate {
    fn from_tally(t: Tally) -> Self {
        let n = t.trials as f64;
        let p = |k: u64| k as f64 / n;
        let se = |k: u64| {
            let q = p(k);
            (q * (1.0 - q) / n).sqrt()
        };
        Self {
            sop_hat: p(t.sop),
            sop_lower_hat: p(t.sop_lower),
            spsc_hat: p(t.spsc),
            ip_hat: p(t.ip),
            se_sop: se(t.sop),
            se_sop_lower: se(t.sop_lower),
            se_spsc: se(t.spsc),
            se_ip: se(t.ip),
            tally: t,
        }
    }

    /// Names of estimates with no observed variance (all trials agreed),
    /// whose zero standard error says nothing about accuracy.
    pub fn degenerate(&self) -> Vec<&'static str> {
        let t = &self.tally;
        [("sop", t.sop), ("sop_lower", t.sop_lower), ("spsc", t.spsc), ("ip", t.ip)]
            .into_iter()
            .filter(|&(_, k)| k == 0 || k == t.trials)
            .map(|(name, _)| name)
            .collect()
    }
}

/// Samplers and thresholds for one scenario.
#[derive(Debug, Clone)]
pub struct Trial {
    rf: RfSampler,
    d: FsoSampler,
    e: FsoSampler,
    rate: f64,
    phi: f64,
}

impl Trial {
    pub fn new<T: Real>(cfg: &ScenarioConfig<T>) -> Result<Self> {
        cfg.validate()?;
        Ok(Self {
            rf: RfSampler::new(&cfg.rf)?,
            d: FsoSampler::new(&cfg.fso_d)?,
            e: FsoSampler::new(&cfg.fso_e)?,
            rate: cfg.target_rate.as_f64(),
            phi: cfg.phi().as_f64(),
        })
    }

    /// Draws `(γ_r, γ_d, γ_e)`.
    pub fn draw(&self, rng: &mut ChaCha8Rng) -> (f64, f64, f64) {
        let gr = self.rf.sample(rng);
        let gd = self.d.sample(rng);
        let ge = self.e.sample(rng);
        (gr, gd, ge)
    }

    /// Classifies one realization.
    pub fn events(&self, gr: f64, gd: f64, ge: f64) -> Tally {
        let t_sr = 0.5 * gr.ln_1p() / std::f64::consts::LN_2;
        let t_rd = (0.5 * (gd.ln_1p() - ge.ln_1p()) / std::f64::consts::LN_2).max(0.0);
        Tally {
            trials: 1,
            sop: u64::from(t_sr.min(t_rd) < self.rate),
            sop_lower: u64::from(gr <= self.phi - 1.0 || gd < self.phi * ge),
            spsc: u64::from(gd > ge),
            ip: u64::from(gd < ge),
        }
    }

    fn run(&self, base: &ChaCha8Rng, trials: std::ops::Range<u64>) -> Tally {
        let mut t = Tally::default();
        for k in trials {
            let mut rng = base.clone();
            rng.set_stream(k);
            rng.set_word_pos(0);
            let (gr, gd, ge) = self.draw(&mut rng);
            t = t + self.events(gr, gd, ge);
        }
        t
    }
}

/// Runs the simulation and tallies counts only.
pub fn tally<T: Real>(cfg: &ScenarioConfig<T>, mc: &McConfig) -> Result<Tally> {
    mc.validate()?;
    let trial = Trial::new(cfg)?;
    let base = ChaCha8Rng::seed_from_u64(mc.seed);
    let batches = mc.n_trials.div_ceil(mc.batch);
    Ok((0..batches)
        .into_par_iter()
        .map(|b| {
            let lo = b * mc.batch;
            let hi = (lo + mc.batch).min(mc.n_trials);
            trial.run(&base, lo..hi)
        })
        .reduce(Tally::default, |x, y| x + y))
}

/// Monte Carlo estimates of SOP, its lower-bound event, SPSC and IP with
/// binomial standard errors.
pub fn estimate<T: Real>(cfg: &ScenarioConfig<T>, mc: &McConfig) -> Result<McEstimate> {
    tally(cfg, mc).map(McEstimate::from_tally)
}
