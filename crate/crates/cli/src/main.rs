use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use ejalab_cli::{execute, exit_code_for, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot size thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match execute(&cli) {
        Ok(outcome) => {
            let body = if cli.json {
                format!("{}\n", outcome.report.to_json())
            } else {
                outcome.text
            };
            // A closed pipe downstream is not an error of ours.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(outcome.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
