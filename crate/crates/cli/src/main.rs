//! `cuspidal`: command-line front end. Exit status is 0 on success, 1 when a
//! verification fails and 2 on usage or precondition errors.

mod args;
mod commands;
mod emit;
mod units;

use std::process::ExitCode;

use clap::Parser;
use cuspidal::Limits;

fn main() -> ExitCode {
    let cli = match args::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let defaults = Limits::default();
    let limits = Limits {
        field_cap: cli.field_cap.unwrap_or(defaults.field_cap),
        group_cap: cli.group_cap.unwrap_or(defaults.group_cap),
    };
    let result = commands::run(&cli.command, &limits)
        .and_then(|o| emit::emit(&o.output, cli.format, cli.output.as_deref()).map(|()| o.passed));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
