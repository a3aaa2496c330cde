use std::fs::File;
use std::io::{self, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use optomech::model::{derive_quantities, DerivedQuantities, SystemParams};
use optomech::steady_state::{window_for, MeanFieldBranch};
use optomech::linear_dynamics::{classify, Stability};
use optomech::sweep::{emit, figure_preset, load_config, measure_branch, run_sweep, Format, Measures};
use optomech::Error;

#[derive(Parser)]
#[command(name = "optomech", about = "Optomechanical cavity + BEC steady-state simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single configuration and print a JSON report.
    Point {
        #[arg(long)]
        config: PathBuf,
    },
    /// Run the sweep described in a config file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Run a figure preset and write `<id>.csv`.
    Figure {
        id: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Print the bistability window (mW) for each configuration.
    Threshold {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Serialize)]
struct PointBranch {
    #[serde(flatten)]
    branch: MeanFieldBranch,
    measures: Option<Measures>,
}

#[derive(Serialize)]
struct PointReport {
    params: SystemParams,
    derived_quantities: DerivedQuantities,
    branches: Vec<PointBranch>,
}

fn point(config: PathBuf) -> Result<bool, Error> {
    let cfg = load_config(config)?;
    let d = derive_quantities(&cfg.params)?;
    let mut ok = true;
    let mut out = Vec::new();
    for mut b in optomech::steady_state::branches(&d) {
        let verdict = classify(&mut b, &d)?;
        let measures = match verdict {
            Stability::Stable => match measure_branch(&b, &d, cfg.params.bec_thermal) {
                Ok(m) => Some(m),
                Err(e) if e.is_numerical() => {
                    ok = false;
                    None
                }
                Err(e) => return Err(e),
            },
            Stability::Marginal => {
                ok = false;
                None
            }
            Stability::Unstable => None,
        };
        out.push(PointBranch { branch: b, measures });
    }
    let report = PointReport {
        params: cfg.params,
        derived_quantities: d,
        branches: out,
    };
    serde_json::to_writer_pretty(io::stdout().lock(), &report)?;
    println!();
    Ok(ok)
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Point { config } => point(config),
        Command::Sweep { config, out, format } => {
            let cfg = load_config(config)?;
            let spec = cfg.require_sweep()?;
            let rows = run_sweep(spec)?;
            match out {
                Some(path) => emit(spec, &rows, format, BufWriter::new(File::create(path)?))?,
                None => emit(spec, &rows, format, io::stdout().lock())?,
            };
            Ok(true)
        }
        Command::Figure { id, out } => {
            let spec = figure_preset(&id)?;
            let rows = run_sweep(&spec)?;
            std::fs::create_dir_all(&out)?;
            let file = File::create(out.join(format!("{id}.csv")))?;
            emit(&spec, &rows, Format::Csv, BufWriter::new(file))?;
            Ok(true)
        }
        Command::Threshold { config } => {
            let cfg = load_config(config)?;
            let configurations = match &cfg.sweep {
                Some(spec) => spec
                    .configurations()
                    .into_iter()
                    .map(|(p, l, b)| (p, l.to_string(), b))
                    .collect(),
                None => vec![(cfg.params, "base".to_string(), cfg.params.bec.present)],
            };
            for (p, label, bec) in configurations {
                let d = derive_quantities(&p)?;
                let bec = if bec { "present" } else { "absent" };
                match window_for(&d, d.delta_c) {
                    Some(w) => println!("{label} {bec} {:.3} {:.3}", w.p_low * 1e3, w.p_high * 1e3),
                    None => println!("{label} {bec} none"),
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numerical() { 2 } else { 1 })
        }
    }
}
