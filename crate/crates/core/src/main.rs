use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rf_fso_secrecy::runner::{self, parse_methods, EvalMethod, Outcome, RunError, RunOptions};

/// Secrecy metrics of mixed RF/FSO decode-and-forward links.
#[derive(Debug, Parser)]
#[command(version, about)]
struct Cli {
    /// Monte Carlo seed (overrides the configuration).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Monte Carlo trials per point (overrides the configuration).
    #[arg(long, global = true)]
    trials: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sweep one parameter of a configuration file.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// `<var>=<start>:<stop>:<steps>`; defaults to the file's [sweep].
        #[arg(long)]
        sweep: Option<String>,
        /// Comma-separated subset of closed, asymptotic, quadrature, mc.
        #[arg(long)]
        methods: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a built-in preset.
    Preset {
        name: String,
        #[arg(long)]
        methods: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// List the built-in presets.
    Presets,
}

fn methods(arg: &Option<String>) -> Result<Option<Vec<EvalMethod>>, RunError> {
    match arg {
        None => Ok(None),
        Some(s) => Ok(Some(parse_methods(&[s.as_str()])?)),
    }
}

fn exit(result: Result<Outcome, RunError>) -> ExitCode {
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(o @ Outcome::NumericFailure) => {
            eprintln!("error: numeric failure on at least half of the points");
            ExitCode::from(o.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.trials {
        if let Err(e) = rf_fso_secrecy::montecarlo::McConfig::new(t, 0) {
            eprintln!("error: --trials: {e}");
            return ExitCode::from(1);
        }
    }
    let opts = RunOptions {
        seed: cli.seed,
        trials: cli.trials,
    };
    match &cli.command {
        Command::Run {
            config,
            sweep,
            methods: m,
            out,
        } => exit(methods(m).and_then(|m| runner::run_scenario(config, sweep.as_deref(), m, out, &opts))),
        Command::Preset { name, methods: m, out } => {
            exit(methods(m).and_then(|m| runner::run_preset(name, m, out, &opts)))
        }
        Command::Presets => {
            print!("{}", runner::list_presets());
            ExitCode::SUCCESS
        }
    }
}
