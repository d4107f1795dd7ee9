use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dirac_vortex::commands::{
    cmd_circulation, cmd_compare, cmd_field, cmd_spinors, cmd_sweep, cmd_verify, Outcome,
};
use dirac_vortex::config::{Overrides, RunConfig};
use dirac_vortex::observables::Convention;

#[derive(Parser)]
#[command(name = "vortex", version, about = "Dirac vortex-beam operators, fields and circulations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// JSON run configuration; omitted keys take their defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// as-published | self-consistent
    #[arg(long, global = true)]
    convention: Option<Convention>,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Run the identity suite and write verify_report.json.
    Verify,
    /// Tabulate plane-wave spinors and operator matrices.
    Spinors,
    /// Write density and velocity maps on the transverse grid.
    Field,
    /// Integrate every velocity provider around the beam axis.
    Circulation,
    /// Tabulate circulations against the spin polarisation.
    Sweep,
    /// Compare the spectral oracle with the closed forms.
    Compare,
}

fn run(cli: &Cli) -> dirac_vortex::Result<Outcome> {
    let overrides = Overrides {
        out: cli.out.clone(),
        seed: cli.seed,
        convention: cli.convention,
    };
    let cfg = RunConfig::resolve(cli.config.as_deref(), &overrides)?;
    match cli.command {
        Command::Verify => {
            let (report, outcome) = cmd_verify(&cfg)?;
            for r in report.failures() {
                eprintln!("FAIL {}: {:e} > {:e}", r.identity, r.max_residual, r.tolerance);
            }
            Ok(outcome)
        }
        Command::Spinors => cmd_spinors(&cfg),
        Command::Field => cmd_field(&cfg),
        Command::Circulation => {
            let (results, outcome) = cmd_circulation(&cfg)?;
            for r in &results {
                println!("{:<16} {:.10e}", r.provider, r.gamma);
            }
            Ok(outcome)
        }
        Command::Sweep => cmd_sweep(&cfg).map(|(_, o)| o),
        Command::Compare => {
            let (report, outcome) = cmd_compare(&cfg)?;
            for m in &report.metrics {
                let bound = m.tolerance.map_or("info".to_string(), |t| format!("≤ {t}"));
                println!("{:<26} {:.3e}  {bound}", m.name, m.max_error);
            }
            Ok(outcome)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            for f in &outcome.files {
                println!("wrote {}", f.display());
            }
            if outcome.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
