use std::io::{self, Write};
use std::process::ExitCode;

use atomwidth::cli::{self, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let args = Cli::parse();
    match cli::execute(&args.command) {
        Ok(reply) => {
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(io::stdout(), "{}", reply.render(args.pretty));
            ExitCode::from(reply.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
