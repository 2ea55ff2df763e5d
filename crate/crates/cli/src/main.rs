use std::process::ExitCode;

use clap::Parser;

use apery_zeta_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("apery-zeta: {e}");
            ExitCode::from(e.code())
        }
    }
}
