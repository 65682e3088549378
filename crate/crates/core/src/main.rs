use std::io::Write;
use std::process::ExitCode;

use boolprod::cli::{run, run_with_threads, Outcome, EXIT_USAGE, THREADS_ENV};

fn main() -> ExitCode {
    let outcome = match std::env::var(THREADS_ENV) {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(t) if t > 0 => run_with_threads(std::env::args_os(), t),
            _ => Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("error: {THREADS_ENV} must be a positive integer, got {s:?}\n"),
            },
        },
        Err(_) => run(std::env::args_os()),
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
