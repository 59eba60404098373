mod args;
mod commands;
mod error;
mod worked_example;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::DEFAULT_MAX_N;
use error::{CliError, ErrorObject};

fn max_n() -> Result<usize, CliError> {
    match std::env::var("MATROID_MAX_N") {
        Err(_) => Ok(DEFAULT_MAX_N),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|e| CliError::parse("MATROID_MAX_N", e)),
    }
}

/// Writes one line to stdout; a closed pipe is not an error worth a panic.
fn emit(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}").and_then(|()| out.flush());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match max_n().and_then(|max| commands::run(&cli, max)) {
        Ok(out) => {
            emit(&out.json.to_string());
            ExitCode::from(out.exit)
        }
        Err(e) => {
            emit(&serde_json::to_string(&ErrorObject::from(&e)).expect("error object serializes"));
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
