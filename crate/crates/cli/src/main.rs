use std::process::ExitCode;

use clap::Parser;
use qheis_cli::commands::{document, run, Cli};

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            if cli.json {
                let doc = document(cli.command.name(), &argv, &out);
                println!("{}", serde_json::to_string_pretty(&doc).expect("json values serialize"));
            } else {
                println!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
