use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use coxeter_hecke::cli::{run, Cli};

fn main() -> ExitCode {
    let result = run(Cli::parse());
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    // A closed pipe is not worth a panic.
    let _ = out.write_all(result.payload.as_bytes());
    let _ = out.flush();
    for line in &result.diagnostics {
        eprintln!("{line}");
    }
    ExitCode::from(result.status.exit_code() as u8)
}
