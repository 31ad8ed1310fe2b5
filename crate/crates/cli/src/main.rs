use std::process::ExitCode;

use clap::Parser;
use invtoep::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    invtoep::main_with(&cli, std::env::args().collect())
}
