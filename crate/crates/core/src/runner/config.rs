//! Scenario configuration files.
//!
//! TOML with sections `[rf]`, `[fso_d]`, `[fso_e]`, `[secrecy]`, `[mc]`, an
//! optional `[sweep]`, optional `[meta]` and any number of `[[curve]]`
//! tables. SNRs are given in dB; conversion to linear scale happens here
//! and nowhere else.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::fso_channel::FsoParams;
use crate::metrics::ScenarioConfig;
use crate::rf_channel::RfParams;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid field `{field}`: {reason}")]
    Field { field: String, reason: String },
}

fn field_err(field: impl Into<String>, reason: impl Into<String>) -> ConfigError {
    ConfigError::Field {
        field: field.into(),
        reason: reason.into(),
    }
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RfSection {
    pub alpha: f64,
    pub kappa: f64,
    pub mu: f64,
    pub x_shadow: f64,
    pub phi_r_db: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FsoSection {
    pub a: f64,
    pub b: f64,
    pub eps: f64,
    /// 1 for heterodyne detection, 2 for intensity modulation.
    pub s: u32,
    pub r: f64,
    pub zeta_t: f64,
    pub u_db: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SecrecySection {
    pub target_rate: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct McSection {
    pub n_trials: u64,
    pub seed: u64,
}

impl Default for McSection {
    fn default() -> Self {
        Self {
            n_trials: 100_000,
            seed: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub variable: String,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
    pub methods: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    #[serde(default)]
    pub title: String,
    #[serde(default)]
    pub notes: String,
}

/// A named set of parameter overrides applied on top of the base scenario.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Curve {
    pub label: String,
    #[serde(default)]
    pub set: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
    pub rf: RfSection,
    pub fso_d: FsoSection,
    pub fso_e: FsoSection,
    pub secrecy: SecrecySection,
    #[serde(default)]
    pub mc: McSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSection>,
    #[serde(default, rename = "curve", skip_serializing_if = "Vec::is_empty")]
    pub curves: Vec<Curve>,
}

/// Parameters that can be overridden per curve or swept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    PhiRDb,
    UdDb,
    UeDb,
    Alpha,
    Kappa,
    Mu,
    XShadow,
    Eps,
    A,
    B,
    S,
    R,
    ZetaT,
    TargetRate,
}

impl Param {
    pub const ALL: [Param; 14] = [
        Param::PhiRDb,
        Param::UdDb,
        Param::UeDb,
        Param::Alpha,
        Param::Kappa,
        Param::Mu,
        Param::XShadow,
        Param::Eps,
        Param::A,
        Param::B,
        Param::S,
        Param::R,
        Param::ZetaT,
        Param::TargetRate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::PhiRDb => "phi_r_db",
            Param::UdDb => "u_d_db",
            Param::UeDb => "u_e_db",
            Param::Alpha => "alpha",
            Param::Kappa => "kappa",
            Param::Mu => "mu",
            Param::XShadow => "x_shadow",
            Param::Eps => "eps",
            Param::A => "a",
            Param::B => "b",
            Param::S => "s",
            Param::R => "r",
            Param::ZetaT => "zeta_t",
            Param::TargetRate => "target_rate",
        }
    }

    /// Whether the parameter may be used as a sweep variable.
    pub fn sweepable(self) -> bool {
        !matches!(self, Param::S | Param::R | Param::ZetaT | Param::TargetRate)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        Param::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| field_err(s, "unknown parameter"))
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        let c: Config = toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
        c.check()?;
        Ok(c)
    }

    pub fn load(path: &std::path::Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_toml(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("configuration always serializes")
    }

    /// Structural checks beyond what the parser enforces.
    pub fn check(&self) -> Result<(), ConfigError> {
        for c in &self.curves {
            for k in c.set.keys() {
                k.parse::<Param>()
                    .map_err(|_| field_err(format!("curve.{}.set.{k}", c.label), "unknown parameter"))?;
            }
        }
        if self.mc.n_trials < crate::montecarlo::MIN_TRIALS {
            return Err(field_err("mc.n_trials", format!("must be >= {}", crate::montecarlo::MIN_TRIALS)));
        }
        self.scenario().map(|_| ())
    }

    /// Returns a copy with `p` set to `v`.
    pub fn with(&self, p: Param, v: f64) -> Config {
        let mut c = self.clone();
        match p {
            Param::PhiRDb => c.rf.phi_r_db = v,
            Param::UdDb => c.fso_d.u_db = v,
            Param::UeDb => c.fso_e.u_db = v,
            Param::Alpha => c.rf.alpha = v,
            Param::Kappa => c.rf.kappa = v,
            Param::Mu => c.rf.mu = v,
            Param::XShadow => c.rf.x_shadow = v,
            Param::TargetRate => c.secrecy.target_rate = v,
            Param::Eps | Param::A | Param::B | Param::S | Param::R | Param::ZetaT => {
                for f in [&mut c.fso_d, &mut c.fso_e] {
                    match p {
                        Param::Eps => f.eps = v,
                        Param::A => f.a = v,
                        Param::B => f.b = v,
                        Param::S => f.s = v as u32,
                        Param::R => f.r = v,
                        _ => f.zeta_t = v,
                    }
                }
            }
        }
        c
    }

    /// Applies a curve's overrides.
    pub fn with_curve(&self, curve: &Curve) -> Result<Config, ConfigError> {
        let mut c = self.clone();
        for (k, &v) in &curve.set {
            let p: Param = k.parse()?;
            if p == Param::S && v != 1.0 && v != 2.0 {
                return Err(field_err(format!("curve.{}.set.s", curve.label), "must be 1 or 2"));
            }
            c = c.with(p, v);
        }
        Ok(c)
    }

    /// Linear-scale scenario.
    pub fn scenario(&self) -> Result<ScenarioConfig<f64>, ConfigError> {
        let rf = &self.rf;
        let rfp = RfParams::new(rf.alpha, rf.kappa, rf.mu, rf.x_shadow, db_to_linear(rf.phi_r_db))
            .map_err(|e| field_err("rf", e.to_string()))?;
        let fso = |name: &str, f: &FsoSection| {
            FsoParams::new(f.a, f.b, f.eps, f.s, f.r, f.zeta_t, db_to_linear(f.u_db))
                .map_err(|e| field_err(name, e.to_string()))
        };
        ScenarioConfig::new(rfp, fso("fso_d", &self.fso_d)?, fso("fso_e", &self.fso_e)?, self.secrecy.target_rate)
            .map_err(|e| field_err("secrecy", e.to_string()))
    }
}
