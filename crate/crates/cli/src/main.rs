use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use convexval::cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version print to stdout and succeed; everything else
            // is a usage error.
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(&cli.command) {
        Ok(output) => {
            for notice in &output.notices {
                eprintln!("notice: {notice}");
            }
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(output.render(cli.format).as_bytes());
            ExitCode::from(output.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
