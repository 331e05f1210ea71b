use std::process::ExitCode;

use clap::Parser;
use necklace_cli::{run, Cli};

fn main() -> ExitCode {
    run(&Cli::parse())
}
