use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use motivic_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match motivic_cli::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.exit_code)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
