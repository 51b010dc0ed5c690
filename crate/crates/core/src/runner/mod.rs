//! Parameter sweeps over a scenario, written as CSV.

pub mod config;
pub mod presets;

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

pub use config::{Config, ConfigError, Param};
pub use presets::{catalog, find, Preset};

use crate::metrics::{
    ip, ip_asymptotic, sop_exact_quadrature, sop_lower, sop_lower_asymptotic, spsc, spsc_asymptotic, SecrecyResult,
};
use crate::montecarlo::{estimate, McConfig};

/// Exact CSV header.
pub const CSV_HEADER: [&str; 16] = [
    "sweep_var",
    "sweep_value",
    "sop_closed",
    "sop_asym",
    "sop_quad",
    "sop_mc",
    "sop_mc_se",
    "spsc_closed",
    "spsc_asym",
    "spsc_mc",
    "spsc_mc_se",
    "ip_closed",
    "ip_asym",
    "ip_mc",
    "ip_mc_se",
    "note",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EvalMethod {
    Closed,
    Asymptotic,
    Quadrature,
    Mc,
}

impl FromStr for EvalMethod {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s.trim() {
            "closed" => Ok(Self::Closed),
            "asymptotic" | "asym" => Ok(Self::Asymptotic),
            "quadrature" | "quad" => Ok(Self::Quadrature),
            "mc" => Ok(Self::Mc),
            other => Err(ConfigError::Field {
                field: "methods".into(),
                reason: format!("unknown method `{other}`"),
            }),
        }
    }
}

/// Parses a comma-separated method list; an empty list is an error.
pub fn parse_methods<S: AsRef<str>>(items: &[S]) -> Result<Vec<EvalMethod>, ConfigError> {
    let mut v = items
        .iter()
        .flat_map(|s| s.as_ref().split(','))
        .filter(|s| !s.trim().is_empty())
        .map(EvalMethod::from_str)
        .collect::<Result<Vec<_>, _>>()?;
    v.sort();
    v.dedup();
    if v.is_empty() {
        return Err(ConfigError::Field {
            field: "methods".into(),
            reason: "at least one method is required".into(),
        });
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub variable: Param,
    /// Strictly increasing, in the units of the configuration file.
    pub grid: Vec<f64>,
    pub methods: Vec<EvalMethod>,
}

impl SweepSpec {
    pub fn new(variable: Param, grid: Vec<f64>, methods: Vec<EvalMethod>) -> Result<Self, ConfigError> {
        let err = |field: &str, reason: &str| ConfigError::Field {
            field: field.into(),
            reason: reason.into(),
        };
        if !variable.sweepable() {
            return Err(err("sweep.variable", &format!("`{variable}` cannot be swept")));
        }
        if grid.is_empty() || grid.iter().any(|v| !v.is_finite()) {
            return Err(err("sweep.grid", "needs at least one finite value"));
        }
        if grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(err("sweep.grid", "must be strictly increasing"));
        }
        if methods.is_empty() {
            return Err(err("methods", "at least one method is required"));
        }
        Ok(Self {
            variable,
            grid,
            methods,
        })
    }

    /// Evenly spaced grid of `steps` points from `start` to `stop`.
    pub fn linear(variable: Param, start: f64, stop: f64, steps: usize, methods: Vec<EvalMethod>) -> Result<Self, ConfigError> {
        let grid = match steps {
            0 => Vec::new(),
            1 => vec![start],
            n => (0..n).map(|i| start + (stop - start) * i as f64 / (n - 1) as f64).collect(),
        };
        Self::new(variable, grid, methods)
    }

    /// Parses `<var>=<start>:<stop>:<steps>`.
    pub fn parse(text: &str, methods: Vec<EvalMethod>) -> Result<Self, ConfigError> {
        let bad = || ConfigError::Field {
            field: "sweep".into(),
            reason: format!("expected <var>=<start>:<stop>:<steps>, got `{text}`"),
        };
        let (var, range) = text.split_once('=').ok_or_else(bad)?;
        let parts: Vec<&str> = range.split(':').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let start: f64 = parts[0].trim().parse().map_err(|_| bad())?;
        let stop: f64 = parts[1].trim().parse().map_err(|_| bad())?;
        let steps: usize = parts[2].trim().parse().map_err(|_| bad())?;
        Self::linear(var.trim().parse()?, start, stop, steps, methods)
    }

    pub fn from_config(cfg: &Config) -> Result<Option<Self>, ConfigError> {
        match &cfg.sweep {
            None => Ok(None),
            Some(s) => {
                let methods = parse_methods(&s.methods)?;
                Self::linear(s.variable.parse()?, s.start, s.stop, s.steps, methods).map(Some)
            }
        }
    }
}

/// Monte Carlo settings shared by every grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RunOptions {
    pub seed: Option<u64>,
    pub trials: Option<u64>,
}

/// One CSV row; `None` cells are written empty.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub sweep_var: String,
    pub sweep_value: f64,
    pub cells: [Option<f64>; 13],
    pub note: String,
    pub failed: bool,
}

impl Row {
    fn record(&self) -> Vec<String> {
        let mut r = Vec::with_capacity(16);
        r.push(self.sweep_var.clone());
        r.push(format!("{}", self.sweep_value));
        r.extend(self.cells.iter().map(|c| c.map(|v| format!("{v}")).unwrap_or_default()));
        r.push(self.note.clone());
        r
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub rows: Vec<Row>,
}

impl Table {
    pub fn failed_points(&self) -> usize {
        self.rows.iter().filter(|r| r.failed).count()
    }

    /// True when at least half of the points failed.
    pub fn mostly_failed(&self) -> bool {
        !self.rows.is_empty() && 2 * self.failed_points() >= self.rows.len()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r.record()).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV is UTF-8")
    }
}

/// Evaluates a single point. Failed metrics leave their cells empty and
/// add to the note.
pub fn evaluate_point(cfg: &Config, methods: &[EvalMethod], opts: &RunOptions) -> ([Option<f64>; 13], Vec<String>, bool) {
    let mut cells = [None; 13];
    let mut notes = Vec::new();
    let mut failed = false;
    let scenario = match cfg.scenario() {
        Ok(s) => s,
        Err(e) => return (cells, vec![e.to_string()], true),
    };
    let mut analytic: Vec<(usize, &str, crate::error::Result<SecrecyResult<f64>>)> = Vec::new();
    for m in methods {
        match m {
            EvalMethod::Closed => {
                analytic.push((0, "sop_closed", sop_lower(&scenario)));
                analytic.push((5, "spsc_closed", spsc(&scenario)));
                analytic.push((9, "ip_closed", ip(&scenario)));
            }
            EvalMethod::Asymptotic => {
                analytic.push((1, "sop_asym", sop_lower_asymptotic(&scenario)));
                analytic.push((6, "spsc_asym", spsc_asymptotic(&scenario)));
                analytic.push((10, "ip_asym", ip_asymptotic(&scenario)));
            }
            EvalMethod::Quadrature => analytic.push((2, "sop_quad", sop_exact_quadrature(&scenario))),
            EvalMethod::Mc => {
                let mc = McConfig {
                    n_trials: opts.trials.unwrap_or(cfg.mc.n_trials),
                    seed: opts.seed.unwrap_or(cfg.mc.seed),
                    ..McConfig::default()
                };
                match estimate(&scenario, &mc) {
                    Ok(e) => {
                        cells[3] = Some(e.sop_lower_hat);
                        cells[4] = Some(e.se_sop_lower);
                        cells[7] = Some(e.spsc_hat);
                        cells[8] = Some(e.se_spsc);
                        cells[11] = Some(e.ip_hat);
                        cells[12] = Some(e.se_ip);
                        for name in e.degenerate() {
                            if name != "sop" {
                                notes.push(format!("{name}_mc has zero variance"));
                            }
                        }
                    }
                    Err(e) => {
                        failed = true;
                        notes.push(format!("mc: {e}"));
                    }
                }
            }
        }
    }
    for (idx, name, r) in analytic {
        match r {
            Ok(v) => {
                if !v.in_range {
                    notes.push(format!("{name} outside [0,1]"));
                }
                cells[idx] = Some(v.value);
            }
            Err(e) => {
                failed = true;
                notes.push(format!("{name}: {e}"));
            }
        }
    }
    (cells, notes, failed)
}

/// Evaluates every curve of `cfg` over the sweep grid. Points run in
/// parallel; rows come back in curve-major grid order.
pub fn run(cfg: &Config, sweep: &SweepSpec, opts: &RunOptions) -> Result<Table, ConfigError> {
    let curves: Vec<(Option<String>, Config)> = if cfg.curves.is_empty() {
        vec![(None, cfg.clone())]
    } else {
        cfg.curves
            .iter()
            .map(|c| cfg.with_curve(c).map(|k| (Some(c.label.clone()), k)))
            .collect::<Result<_, _>>()?
    };
    let points: Vec<(Option<&String>, f64, Config)> = curves
        .iter()
        .flat_map(|(label, c)| sweep.grid.iter().map(move |&v| (label.as_ref(), v, c.with(sweep.variable, v))))
        .collect();
    let rows = points
        .par_iter()
        .map(|(label, v, c)| {
            let (cells, notes, failed) = evaluate_point(c, &sweep.methods, opts);
            let mut note = String::new();
            if let Some(l) = label {
                note.push_str(l);
            }
            for n in notes {
                if !note.is_empty() {
                    note.push_str("; ");
                }
                let _ = write!(note, "{n}");
            }
            Row {
                sweep_var: sweep.variable.name().to_string(),
                sweep_value: *v,
                cells,
                note,
                failed,
            }
        })
        .collect();
    Ok(Table { rows })
}

/// Result of a run that produced a CSV file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// At least half the points failed numerically.
    NumericFailure,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::NumericFailure => 2,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("cannot write {path}: {source}")]
    Output {
        path: String,
        source: std::io::Error,
    },
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        1
    }
}

fn write_table(table: &Table, out: &Path) -> Result<Outcome, RunError> {
    std::fs::write(out, table.to_csv()).map_err(|source| RunError::Output {
        path: out.display().to_string(),
        source,
    })?;
    Ok(if table.mostly_failed() {
        Outcome::NumericFailure
    } else {
        Outcome::Success
    })
}

/// Runs `cfg` with an optional sweep and method override and writes CSV.
pub fn run_config(
    cfg: &Config,
    sweep: Option<&str>,
    methods: Option<Vec<EvalMethod>>,
    out: &Path,
    opts: &RunOptions,
) -> Result<Outcome, RunError> {
    let from_file = SweepSpec::from_config(cfg)?;
    let methods = match methods {
        Some(m) => m,
        None => from_file
            .as_ref()
            .map(|s| s.methods.clone())
            .unwrap_or_else(|| vec![EvalMethod::Closed]),
    };
    let spec = match sweep {
        Some(s) => SweepSpec::parse(s, methods)?,
        None => match from_file {
            Some(mut s) => {
                s.methods = methods;
                SweepSpec::new(s.variable, s.grid, s.methods)?
            }
            None => {
                return Err(ConfigError::Field {
                    field: "sweep".into(),
                    reason: "no sweep given on the command line or in the file".into(),
                }
                .into())
            }
        },
    };
    let table = run(cfg, &spec, opts)?;
    write_table(&table, out)
}

/// Loads a configuration file, runs it and writes CSV.
pub fn run_scenario(
    config_path: &Path,
    sweep: Option<&str>,
    methods: Option<Vec<EvalMethod>>,
    out: &Path,
    opts: &RunOptions,
) -> Result<Outcome, RunError> {
    let cfg = Config::load(config_path)?;
    run_config(&cfg, sweep, methods, out, opts)
}

/// Runs a built-in preset and writes CSV.
pub fn run_preset(name: &str, methods: Option<Vec<EvalMethod>>, out: &Path, opts: &RunOptions) -> Result<Outcome, RunError> {
    let p = find(name).ok_or_else(|| ConfigError::Field {
        field: "preset".into(),
        reason: format!("unknown preset `{name}`"),
    })?;
    run_config(&p.config, None, methods, out, opts)
}

/// Human-readable catalog listing.
pub fn list_presets() -> String {
    let mut s = String::new();
    for p in catalog() {
        let c = &p.config;
        let title = c.meta.as_ref().map(|m| m.title.as_str()).unwrap_or("");
        let _ = writeln!(s, "{}: {title}", p.name);
        let _ = writeln!(
            s,
            "  rf: alpha={} kappa={} mu={} x={} phi_r={} dB",
            c.rf.alpha, c.rf.kappa, c.rf.mu, c.rf.x_shadow, c.rf.phi_r_db
        );
        for (name, f) in [("fso_d", &c.fso_d), ("fso_e", &c.fso_e)] {
            let _ = writeln!(
                s,
                "  {name}: a={} b={} eps={} s={} r={} zeta_t={} U={} dB",
                f.a, f.b, f.eps, f.s, f.r, f.zeta_t, f.u_db
            );
        }
        let _ = writeln!(s, "  target_rate={}", c.secrecy.target_rate);
        if let Some(sw) = &c.sweep {
            let _ = writeln!(
                s,
                "  sweep: {}={}:{}:{} methods={}",
                sw.variable,
                sw.start,
                sw.stop,
                sw.steps,
                sw.methods.join(",")
            );
        }
        for cv in &c.curves {
            let set: Vec<String> = cv.set.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(s, "  curve \"{}\": {}", cv.label, set.join(" "));
        }
        if let Some(m) = &c.meta {
            if !m.notes.is_empty() {
                let _ = writeln!(s, "  note: {}", m.notes);
            }
        }
    }
    s
}
