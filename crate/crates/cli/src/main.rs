use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use cyclic_sieve_cli::args::Cli;
use cyclic_sieve_cli::{execute, CliError};
use serde_json::json;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError::Usage(e.render().to_string().trim_end().to_string());
            eprintln!("{}", err.to_json());
            return ExitCode::from(2);
        }
    };
    match execute(&cli) {
        Ok(resp) => {
            for w in &resp.warnings {
                eprintln!("{}", json!({ "status": "warning", "message": w }));
            }
            print!("{}", resp.stdout);
            if let Some(f) = resp.failure_json() {
                eprintln!("{f}");
            }
            ExitCode::from(resp.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
