use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use logperm_cli::{run, Cli, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            for w in &outcome.warnings {
                eprintln!("{w}");
            }
            // A closed pipe on stdout is not an error worth reporting.
            let _ = writeln!(std::io::stdout(), "{}", outcome.render(cli.format));
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("logperm: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
