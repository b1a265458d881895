use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use multispec_cli::{run, Cli};

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(multispec_cli::Status::Io.code() as u8);
            }
            ExitCode::from(outcome.status.code() as u8)
        }
        Err(e) => {
            eprintln!("multispec: {e}");
            ExitCode::from(e.status().code() as u8)
        }
    }
}
