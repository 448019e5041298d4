use std::process::ExitCode;

use clap::Parser;
use cwidth_cli::{execute, Cli, EXIT_INVALID};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_INVALID as u8)
        }
    }
}
