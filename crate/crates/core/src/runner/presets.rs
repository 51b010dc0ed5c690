//! Built-in scenarios: the figure settings and the special-case rows of the
//! RF, FSO and combined model tables.
//!
//! The figure settings fix the base parameters but not the sweep endpoints
//! or every curve value; the presets sweep [0, 30] dB and choose the
//! remaining curve values. Each preset says so in its notes.

use std::collections::BTreeMap;

use super::config::{Config, Curve, FsoSection, McSection, Meta, RfSection, SecrecySection, SweepSection};

const RECONSTRUCTED: &str = "sweep endpoints [0, 30] dB and curve values are a reconstruction";

#[derive(Debug, Clone, PartialEq)]
pub struct Preset {
    pub name: &'static str,
    pub config: Config,
}

fn rf(alpha: f64, kappa: f64, mu: f64, x_shadow: f64, phi_r_db: f64) -> RfSection {
    RfSection {
        alpha,
        kappa,
        mu,
        x_shadow,
        phi_r_db,
    }
}

fn fso(a: f64, b: f64, eps: f64, s: u32, u_db: f64) -> FsoSection {
    FsoSection {
        a,
        b,
        eps,
        s,
        r: 0.1,
        zeta_t: 1.0,
        u_db,
    }
}

fn curve(label: &str, set: &[(&str, f64)]) -> Curve {
    Curve {
        label: label.to_string(),
        set: set.iter().map(|&(k, v)| (k.to_string(), v)).collect::<BTreeMap<_, _>>(),
    }
}

fn sweep(variable: &str, methods: &[&str]) -> SweepSection {
    SweepSection {
        variable: variable.to_string(),
        start: 0.0,
        stop: 30.0,
        steps: 16,
        methods: methods.iter().map(|m| m.to_string()).collect(),
    }
}

struct Builder {
    title: &'static str,
    rf: RfSection,
    fso_d: FsoSection,
    fso_e: FsoSection,
    sweep: SweepSection,
    curves: Vec<Curve>,
}

impl Builder {
    fn build(self, notes: &str) -> Config {
        Config {
            meta: Some(Meta {
                title: self.title.to_string(),
                notes: notes.to_string(),
            }),
            rf: self.rf,
            fso_d: self.fso_d,
            fso_e: self.fso_e,
            secrecy: SecrecySection { target_rate: 0.5 },
            mc: McSection::default(),
            sweep: Some(self.sweep),
            curves: self.curves,
        }
    }
}

fn turbulence_and_detection() -> Vec<Curve> {
    let mut v = Vec::new();
    for (name, a, b) in [("strong", 2.296, 2.0), ("moderate", 4.2, 3.0), ("weak", 8.0, 4.0)] {
        for (det, s) in [("HD", 1.0), ("IM/DD", 2.0)] {
            v.push(curve(&format!("{name} {det}"), &[("a", a), ("b", b), ("s", s)]));
        }
    }
    v
}

fn turbulence_and_pointing() -> Vec<Curve> {
    let mut v = Vec::new();
    for (name, a, b) in [("strong", 2.296, 2.0), ("moderate", 4.2, 3.0), ("weak", 8.0, 4.0)] {
        for eps in [1.1, 6.7] {
            v.push(curve(&format!("{name} eps={eps}"), &[("a", a), ("b", b), ("eps", eps)]));
        }
    }
    v
}

fn figures() -> Vec<Preset> {
    let mut out = Vec::new();
    let mut add = |name: &'static str, b: Builder| {
        out.push(Preset {
            name,
            config: b.build(RECONSTRUCTED),
        })
    };
    add(
        "fig2",
        Builder {
            title: "SOP versus phi_r for selected alpha and kappa",
            rf: rf(2.0, 1.0, 1.0, 100.0, 10.0),
            fso_d: fso(4.2, 3.0, 1.1, 1, 15.0),
            fso_e: fso(4.2, 3.0, 1.1, 1, -5.0),
            sweep: sweep("phi_r_db", &["closed", "mc"]),
            curves: vec![
                curve("alpha=2 kappa=1", &[("alpha", 2.0), ("kappa", 1.0)]),
                curve("alpha=2 kappa=3", &[("alpha", 2.0), ("kappa", 3.0)]),
                curve("alpha=3 kappa=1", &[("alpha", 3.0), ("kappa", 1.0)]),
                curve("alpha=3 kappa=3", &[("alpha", 3.0), ("kappa", 3.0)]),
            ],
        },
    );
    add(
        "fig3",
        Builder {
            title: "SOP versus phi_r for selected mu and x",
            rf: rf(2.0, 2.0, 1.0, 1.0, 10.0),
            fso_d: fso(4.2, 3.0, 1.1, 1, 10.0),
            fso_e: fso(4.2, 3.0, 1.1, 1, -10.0),
            sweep: sweep("phi_r_db", &["closed", "mc"]),
            curves: vec![
                curve("mu=1 x=1", &[("mu", 1.0), ("x_shadow", 1.0)]),
                curve("mu=1 x=10", &[("mu", 1.0), ("x_shadow", 10.0)]),
                curve("mu=3 x=1", &[("mu", 3.0), ("x_shadow", 1.0)]),
                curve("mu=3 x=10", &[("mu", 3.0), ("x_shadow", 10.0)]),
            ],
        },
    );
    add(
        "fig4",
        Builder {
            title: "SOP versus U_d for selected a, b, s_d and s_e",
            rf: rf(2.5, 2.0, 2.0, 1000.0, 10.0),
            fso_d: fso(4.2, 3.0, 1.1, 1, 15.0),
            fso_e: fso(4.2, 3.0, 1.1, 1, -5.0),
            sweep: sweep("u_d_db", &["closed", "mc"]),
            curves: turbulence_and_detection(),
        },
    );
    add(
        "fig5",
        Builder {
            title: "SPSC versus U_d for selected a, b, s_d and s_e",
            rf: rf(2.5, 2.0, 2.0, 1000.0, 10.0),
            fso_d: fso(4.2, 3.0, 1.1, 1, 15.0),
            fso_e: fso(4.2, 3.0, 1.1, 1, -1.0),
            sweep: sweep("u_d_db", &["closed", "mc"]),
            curves: turbulence_and_detection(),
        },
    );
    add(
        "fig6",
        Builder {
            title: "IP versus U_d for selected a, b, s_d and s_e",
            rf: rf(2.5, 2.0, 2.0, 1000.0, 10.0),
            fso_d: fso(4.2, 3.0, 1.1, 1, 15.0),
            fso_e: fso(4.2, 3.0, 1.1, 1, -1.0),
            sweep: sweep("u_d_db", &["closed", "mc"]),
            curves: turbulence_and_detection(),
        },
    );
    add(
        "fig7",
        Builder {
            title: "SOP versus U_d for selected a, b and eps",
            rf: rf(3.0, 2.0, 2.0, 1000.0, 12.0),
            fso_d: fso(4.2, 3.0, 1.1, 1, 15.0),
            fso_e: fso(4.2, 3.0, 1.1, 1, -10.0),
            sweep: sweep("u_d_db", &["closed", "asymptotic", "mc"]),
            curves: turbulence_and_pointing(),
        },
    );
    add(
        "fig8",
        Builder {
            title: "SPSC versus U_d for selected a, b and eps",
            rf: rf(3.0, 2.0, 2.0, 1000.0, 12.0),
            fso_d: fso(4.2, 3.0, 1.1, 1, 15.0),
            fso_e: fso(4.2, 3.0, 1.1, 1, 2.0),
            sweep: sweep("u_d_db", &["closed", "asymptotic", "mc"]),
            curves: turbulence_and_pointing(),
        },
    );
    add(
        "fig9",
        Builder {
            title: "IP versus U_d for selected a, b and eps",
            rf: rf(3.0, 2.0, 2.0, 1000.0, 12.0),
            fso_d: fso(4.2, 3.0, 1.1, 1, 15.0),
            fso_e: fso(4.2, 3.0, 1.1, 1, 3.0),
            sweep: sweep("u_d_db", &["closed", "asymptotic", "mc"]),
            curves: turbulence_and_pointing(),
        },
    );
    add(
        "fig10",
        Builder {
            title: "SPSC versus U_d for selected U_e",
            rf: rf(2.5, 2.0, 2.0, 1000.0, 10.0),
            fso_d: fso(2.296, 2.0, 1.1, 1, 15.0),
            fso_e: fso(2.296, 2.0, 1.1, 1, 0.0),
            sweep: sweep("u_d_db", &["closed", "mc"]),
            curves: [-5.0, 0.0, 5.0]
                .iter()
                .map(|&u| curve(&format!("U_e={u} dB"), &[("u_e_db", u)]))
                .collect(),
        },
    );
    add(
        "fig11",
        Builder {
            title: "SOP versus phi_r for RF special cases",
            rf: rf(2.0, 0.0, 1.0, 1.0, 10.0),
            fso_d: fso(2.296, 2.0, 1.1, 1, 15.0),
            fso_e: fso(2.296, 2.0, 1.1, 1, 0.0),
            sweep: sweep("phi_r_db", &["closed", "mc"]),
            curves: vec![
                curve("Rayleigh", &[("alpha", 2.0), ("kappa", 0.0), ("mu", 1.0), ("x_shadow", 1.0)]),
                curve("Nakagami-m", &[("alpha", 2.0), ("kappa", 0.0), ("mu", 2.0), ("x_shadow", 2.0)]),
                curve("Weibull", &[("alpha", 3.0), ("kappa", 0.0), ("mu", 1.0), ("x_shadow", 1.0)]),
                curve("kappa-mu", &[("alpha", 2.0), ("kappa", 1.0), ("mu", 2.0), ("x_shadow", 10000.0)]),
                curve("eta-mu", &[("alpha", 2.0), ("kappa", 0.5), ("mu", 2.0), ("x_shadow", 1.0)]),
                curve("alpha-kappa-mu", &[("alpha", 2.5), ("kappa", 2.0), ("mu", 2.0), ("x_shadow", 10000.0)]),
            ],
        },
    );
    add(
        "fig12",
        Builder {
            title: "SOP versus U_d for selected r and zeta_t",
            rf: rf(3.0, 1.0, 2.0, 1000.0, 5.0),
            fso_d: fso(4.2, 3.0, 1.1, 1, 15.0),
            fso_e: fso(4.2, 3.0, 1.1, 1, -5.0),
            sweep: sweep("u_d_db", &["closed", "mc"]),
            curves: vec![
                curve("r=0.1 zeta_t=1", &[("r", 0.1), ("zeta_t", 1.0)]),
                curve("r=0 zeta_t=1", &[("r", 0.0), ("zeta_t", 1.0)]),
                curve("r=0.1 zeta_t=2", &[("r", 0.1), ("zeta_t", 2.0)]),
                curve("r=0.5 zeta_t=0.5", &[("r", 0.5), ("zeta_t", 0.5)]),
            ],
        },
    );
    add(
        "fig13",
        Builder {
            title: "SOP versus U_d for the combined special cases",
            rf: rf(2.0, 0.0, 1.0, 1.0, 0.0),
            fso_d: fso(4.2, 3.0, 1.1, 1, 15.0),
            fso_e: fso(4.2, 3.0, 1.1, 1, -10.0),
            sweep: sweep("u_d_db", &["closed", "mc"]),
            curves: combined_rows().into_iter().map(|(_, c)| c).collect(),
        },
    );
    out
}

/// Rows of the combined RF/FSO special-case table.
fn combined_rows() -> Vec<(&'static str, Curve)> {
    let row = |label: &str, rf: [f64; 4], fso: [f64; 3]| {
        curve(
            label,
            &[
                ("alpha", rf[0]),
                ("kappa", rf[1]),
                ("mu", rf[2]),
                ("x_shadow", rf[3]),
                ("zeta_t", fso[0]),
                ("r", fso[1]),
                ("b", fso[2]),
            ],
        )
    };
    vec![
        ("table3-nakagami-lognormal", row("Nakagami-m / lognormal", [2.0, 0.0, 2.0, 2.0], [2.0, 0.0001, 3.0])),
        ("table3-weibull-k", row("Weibull / K", [3.0, 0.0, 1.0, 1.0], [2.0, 0.1, 1.0])),
        ("table3-eta-mu-lognormal", row("eta-mu / lognormal", [2.0, 0.0, 4.0, 2.0], [2.0, 0.0001, 3.0])),
        ("table3-kappa-mu-rice", row("kappa-mu / Rice-Nakagami", [2.0, 1.0, 2.0, 100.0], [2.0, 0.1, 3.0])),
        ("table3-rayleigh-gg", row("Rayleigh / Gamma-Gamma", [2.0, 0.0, 1.0, 1.0], [1.0, 0.0, 2.0])),
        ("table3-nakagami-malaga", row("Nakagami-m / Malaga", [2.0, 0.0, 2.0, 2.0], [1.0, 0.1, 3.0])),
    ]
}

fn single(title: &str, base: &Config, c: &Curve) -> Result<Config, super::config::ConfigError> {
    let mut cfg = base.with_curve(c)?;
    cfg.curves.clear();
    cfg.meta = Some(Meta {
        title: title.to_string(),
        notes: RECONSTRUCTED.to_string(),
    });
    Ok(cfg)
}

fn tables() -> Vec<Preset> {
    let figs = figures();
    let base = |name: &str| figs.iter().find(|p| p.name == name).expect("figure exists").config.clone();
    let mut out = Vec::new();
    let rf_base = base("fig11");
    let rf_rows = [
        ("table1-rayleigh", "Rayleigh", [2.0, 0.0, 1.0, 1.0]),
        ("table1-nakagami", "Nakagami-m (m = 2)", [2.0, 0.0, 2.0, 2.0]),
        ("table1-kappa-mu", "kappa-mu (x large)", [2.0, 1.0, 2.0, 10000.0]),
        ("table1-eta-mu", "eta-mu (eta = 0.5, mu = 1)", [2.0, 0.5, 2.0, 1.0]),
        ("table1-weibull", "Weibull", [3.0, 0.0, 1.0, 1.0]),
        ("table1-alpha-kappa-mu", "alpha-kappa-mu (x large)", [2.5, 2.0, 2.0, 10000.0]),
    ];
    for (name, title, v) in rf_rows {
        let c = curve(title, &[("alpha", v[0]), ("kappa", v[1]), ("mu", v[2]), ("x_shadow", v[3])]);
        out.push(Preset {
            name,
            config: single(title, &rf_base, &c).expect("valid row"),
        });
    }
    let fso_base = base("fig12");
    let fso_rows = [
        ("table2-gamma-gamma", "Gamma-Gamma", [0.0, 1.0, 3.0]),
        ("table2-rice-nakagami", "Rice-Nakagami", [0.1, 2.0, 3.0]),
        ("table2-lognormal", "Lognormal (r small)", [0.0001, 2.0, 3.0]),
        ("table2-k", "K distribution", [0.1, 2.0, 1.0]),
    ];
    for (name, title, v) in fso_rows {
        let c = curve(title, &[("r", v[0]), ("zeta_t", v[1]), ("b", v[2])]);
        out.push(Preset {
            name,
            config: single(title, &fso_base, &c).expect("valid row"),
        });
    }
    let comb_base = base("fig13");
    for (name, c) in combined_rows() {
        out.push(Preset {
            name,
            config: single(&c.label.clone(), &comb_base, &c).expect("valid row"),
        });
    }
    out
}

/// Every built-in preset, figures first.
pub fn catalog() -> Vec<Preset> {
    let mut v = figures();
    v.extend(tables());
    v
}

pub fn find(name: &str) -> Option<Preset> {
    catalog().into_iter().find(|p| p.name == name)
}
