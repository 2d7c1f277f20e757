use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = fpclass_cli::Cli::parse();
    let config = match cli.into_config() {
        Ok(config) => config,
        Err(failure) => {
            eprintln!("fpclass: {}", failure.message());
            return ExitCode::from(failure.exit_code());
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match fpclass_cli::run(&config, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("fpclass: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}
