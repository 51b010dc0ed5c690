use std::process::Command;

use rf_fso_secrecy::runner::{self, catalog, find, Config, EvalMethod, Outcome, RunOptions, CSV_HEADER};

const BIN: &str = env!("CARGO_BIN_EXE_rf-fso-secrecy");

fn small_config() -> String {
    let mut c = find("fig4").unwrap().config;
    c.curves.truncate(2);
    c.mc.n_trials = 2000;
    if let Some(s) = c.sweep.as_mut() {
        s.steps = 3;
    }
    c.to_toml()
}

#[test]
fn catalog_contents() {
    let cat = catalog();
    assert!(cat.iter().filter(|p| p.name.starts_with("fig")).count() >= 12);
    let n = find("table1-nakagami").unwrap().config;
    assert_eq!((n.rf.alpha, n.rf.kappa, n.rf.mu), (2.0, 0.0, 2.0));
    let g = find("table3-rayleigh-gg").unwrap().config;
    assert_eq!((g.rf.alpha, g.rf.kappa, g.rf.mu, g.rf.x_shadow), (2.0, 0.0, 1.0, 1.0));
    assert_eq!((g.fso_d.zeta_t, g.fso_d.r, g.fso_d.b), (1.0, 0.0, 2.0));
    assert_eq!(g.fso_e, Config { ..g.clone() }.fso_e);
    let f2 = find("fig2").unwrap().config;
    assert_eq!((f2.rf.mu, f2.rf.x_shadow, f2.fso_d.a, f2.fso_d.b, f2.fso_d.s), (1.0, 100.0, 4.2, 3.0, 1));
    assert_eq!((f2.fso_d.u_db, f2.fso_e.u_db, f2.fso_d.eps), (15.0, -5.0, 1.1));
    assert!(runner::list_presets().contains("table2-k:"));
}

#[test]
fn presets_round_trip_through_parser() {
    for p in catalog() {
        let text = p.config.to_toml();
        let back = Config::from_toml(&text).unwrap_or_else(|e| panic!("{}: {e}", p.name));
        assert_eq!(back, p.config, "{}", p.name);
    }
}

#[test]
fn fig2_preset_columns() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig2.csv");
    let opts = RunOptions {
        seed: Some(3),
        trials: Some(2000),
    };
    assert_eq!(runner::run_preset("fig2", None, &out, &opts).unwrap(), Outcome::Success);
    let mut r = csv::Reader::from_path(&out).unwrap();
    assert_eq!(r.headers().unwrap().iter().collect::<Vec<_>>(), CSV_HEADER.to_vec());
    let rows: Vec<csv::StringRecord> = r.records().map(|x| x.unwrap()).collect();
    assert_eq!(rows.len(), 4 * 16);
    let first: f64 = rows[0][1].parse().unwrap();
    let last: f64 = rows[15][1].parse().unwrap();
    assert_eq!((first, last), (0.0, 30.0));
    for row in &rows {
        assert_eq!(&row[0], "phi_r_db");
        assert!(!row[2].is_empty() && !row[5].is_empty() && !row[6].is_empty());
        assert!(row[3].is_empty() && row[4].is_empty());
    }
}

#[test]
fn identical_seed_gives_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.toml");
    std::fs::write(&cfg, small_config()).unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        let st = Command::new(BIN)
            .args(["--seed", "42", "run", "--config"])
            .arg(&cfg)
            .args(["--methods", "closed,mc", "--out"])
            .arg(&out)
            .status()
            .unwrap();
        assert_eq!(st.code(), Some(0));
        std::fs::read(out).unwrap()
    };
    let a = run("a.csv");
    let b = run("b.csv");
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().count(), 1 + 2 * 3);
}

#[test]
fn empty_methods_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.toml");
    std::fs::write(&cfg, small_config()).unwrap();
    let out = dir.path().join("never.csv");
    let st = Command::new(BIN)
        .args(["run", "--config"])
        .arg(&cfg)
        .args(["--methods", "", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(1));
    assert!(!out.exists());
    let e = runner::run_scenario(&cfg, None, Some(vec![]), &out, &RunOptions::default());
    assert!(e.is_err());
    assert!(!out.exists());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.csv");
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "[rf]\nalpha = \n").unwrap();
    let st = Command::new(BIN).args(["run", "--config"]).arg(&bad).args(["--out"]).arg(&out).status().unwrap();
    assert_eq!(st.code(), Some(1));
    let st = Command::new(BIN).args(["preset", "nope", "--out"]).arg(&out).status().unwrap();
    assert_eq!(st.code(), Some(1));
    let st = Command::new(BIN).args(["--trials", "10", "presets"]).status().unwrap();
    assert_eq!(st.code(), Some(1));

    // Non-integer μ at two of three points: the rows are written with notes
    // and the run reports a numeric failure.
    let cfg = dir.path().join("c.toml");
    std::fs::write(&cfg, small_config()).unwrap();
    let st = Command::new(BIN)
        .args(["run", "--config"])
        .arg(&cfg)
        .args(["--sweep", "mu=1.5:2.5:3", "--methods", "closed", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(2));
    let text = std::fs::read_to_string(&out).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows[0].starts_with("mu,1.5,,") && rows[0].contains("integer"));
    assert!(rows[1].starts_with("mu,2,0."));
}

#[test]
fn rows_follow_grid_order() {
    let cfg = Config::from_toml(&small_config()).unwrap();
    let sweep = runner::SweepSpec::parse("u_d_db=30:40:1", vec![EvalMethod::Closed]).unwrap();
    assert_eq!(sweep.grid, vec![30.0]);
    let s = runner::SweepSpec::parse("u_d_db=0:40:5", vec![EvalMethod::Closed, EvalMethod::Asymptotic]).unwrap();
    let t = runner::run(&cfg, &s, &RunOptions::default()).unwrap();
    let values: Vec<f64> = t.rows.iter().map(|r| r.sweep_value).collect();
    assert_eq!(values, vec![0.0, 10.0, 20.0, 30.0, 40.0, 0.0, 10.0, 20.0, 30.0, 40.0]);
    assert!(t.rows.iter().all(|r| r.cells[0].is_some() && r.cells[1].is_some()));
}
