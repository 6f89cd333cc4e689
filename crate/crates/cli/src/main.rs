use std::io::Write;
use std::process::ExitCode;

use circkr_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let text = e.to_string();
            let (first, rest) = text.split_once('\n').unwrap_or((&text, ""));
            eprintln!("ERROR Usage: {}", first.trim_start_matches("error: "));
            eprint!("{rest}");
            return ExitCode::from(circkr_cli::EXIT_INVALID as u8);
        }
        Err(e) => e.exit(),
    };
    match run(&cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                eprintln!("ERROR Io: failed to write standard output");
                return ExitCode::from(circkr_cli::EXIT_INVALID as u8);
            }
            ExitCode::from(outcome.code as u8)
        }
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.code as u8)
        }
    }
}
