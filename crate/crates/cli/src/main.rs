use std::process::ExitCode;

use clap::Parser;
use finf_cli::{render, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    let text = render(&outcome.json);
    match &cli.settings.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if let Some(err) = outcome.json.get("error") {
        eprintln!("error in {}: {} {}", err["source"], err["pointer"], err["message"]);
    }
    ExitCode::from(outcome.code as u8)
}
