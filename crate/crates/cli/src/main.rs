use std::io::Write;

use clap::Parser;

use rankin_cli::{run, Cli, EXIT_USAGE};

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout(), "{}", outcome.output);
            std::process::exit(outcome.code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(EXIT_USAGE);
        }
    }
}
