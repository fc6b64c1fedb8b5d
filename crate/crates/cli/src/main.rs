use std::process::ExitCode;

use clap::Parser;
use gforge_cli::{render, run, Cli, RunConfig, EXIT_ERROR};

fn main() -> ExitCode {
    let cfg = RunConfig::from(Cli::parse());
    let outcome = match run(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_ERROR as u8);
        }
    };
    let text = render(&outcome.artifact);
    match &cfg.output_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: writing {}: {e}", path.display());
                return ExitCode::from(EXIT_ERROR as u8);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(outcome.status.exit_code() as u8)
}
