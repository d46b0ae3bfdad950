mod commands;
mod config;
mod error;
mod output;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gaussprobe::exec::with_jobs;

use commands::Panel;
use error::{CliError, CliResult};

/// QFI and optimal probes for Gaussian unitary channels.
#[derive(Debug, Parser)]
#[command(name = "gaussprobe", version)]
struct Cli {
    /// JSON config document ("schema": 1).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Overrides the seed of randomized commands.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads (0 uses all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// QFI breakdown of one probe and channel (JSON).
    Qfi,
    /// Evaluate a named closed-form expression (JSON).
    ClosedForm {
        /// eq19, eq20, eq21, eq28, eq29, eq30, eq32, eq33, eq34, eq36, eq37, eq38, appC-st or appC-mix.
        label: String,
    },
    /// QFI over a grid of one parameter (CSV).
    Sweep,
    /// Best probe under an energy budget (JSON).
    Optimize,
    /// Fitted power law of the optimal QFI against energy (JSON).
    Scaling,
    /// Real-form covariance matrices before and after the channel (CSV).
    Ellipse,
    /// Heisenberg and shot-noise limits of the four channels (CSV).
    Limits,
    /// Run the equivalence and Fock panels.
    Validate {
        #[arg(long, value_enum, default_value_t = Panel::All)]
        panel: Panel,
        #[arg(long, default_value_t = 1000)]
        draws: usize,
        /// Multiplies the closed forms before comparison.
        #[arg(long, default_value_t = 1.0, hide = true)]
        fault_scale: f64,
    },
}

fn run(cli: &Cli) -> CliResult<String> {
    let cfg = cli.config.as_deref();
    match &cli.command {
        Command::Qfi => commands::qfi(cfg),
        Command::ClosedForm { label } => commands::closed_form(label, cfg),
        Command::Sweep => commands::sweep(cfg),
        Command::Optimize => commands::optimize(cfg, cli.seed),
        Command::Scaling => commands::scaling(cfg, cli.seed),
        Command::Ellipse => commands::ellipse(cfg),
        Command::Limits => commands::limits(cfg),
        Command::Validate { panel, draws, fault_scale } => {
            let (report, ok) = commands::validate(*panel, *draws, cli.seed.unwrap_or(0), *fault_scale)?;
            emit(cli, &report)?;
            if ok {
                Ok(String::new())
            } else {
                Err(CliError::panel("validation panel failed"))
            }
        }
    }
}

fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    match &cli.output {
        Some(p) => fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { error::EXIT_PARSE as u8 } else { 0 });
        }
    };
    let result = with_jobs(cli.jobs, || run(&cli)).and_then(|out| {
        if matches!(cli.command, Command::Validate { .. }) {
            Ok(())
        } else {
            emit(&cli, &out)
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
