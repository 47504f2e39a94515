mod args;
mod commands;
mod output;
mod report;

use std::process::ExitCode;

use clap::Parser;
use unimodal_core::Error;

use args::{Cli, Command, Format};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let report = match &cli.command {
        Command::CValues { max } => commands::c_values(*max as usize),
        Command::Table(a) => commands::table(a),
        Command::Series(a) => commands::series(a),
        Command::Verify(a) => commands::verify(a),
    };
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            let usage = matches!(e, Error::InvalidArgument(_) | Error::CapExceeded { .. });
            return ExitCode::from(if usage { EXIT_USAGE } else { EXIT_VERIFY_FAILED });
        }
    };

    let rendered = match cli.format {
        Format::Json => Ok(report.to_json()),
        Format::Csv => report.to_csv().map_err(|e| e.to_string()),
        Format::Text => Ok(report.to_text()),
    };
    let written = rendered.and_then(|text| {
        match &cli.output {
            Some(path) => output::write_atomic(path, text.as_bytes()),
            None => output::write_stdout(text.as_bytes()),
        }
        .map_err(|e| e.to_string())
    });
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_VERIFY_FAILED);
    }
    if report.failed {
        ExitCode::from(EXIT_VERIFY_FAILED)
    } else {
        ExitCode::SUCCESS
    }
}
