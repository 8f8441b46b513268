use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gbdepth_cli::{run, JobSpec, EXIT_PARSE};

fn main() -> ExitCode {
    let spec = match JobSpec::try_parse() {
        Ok(spec) => spec,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let outcome = run(&spec);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
