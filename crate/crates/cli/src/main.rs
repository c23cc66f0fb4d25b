use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lochom_cli::{parse_session, run_session, Config};

#[derive(Parser)]
#[command(name = "lochom", version, about = "Local cohomology and Cohen-Macaulayfication sessions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a session file (`-` reads standard input) and print its transcript.
    Run {
        file: PathBuf,
        /// Seed for randomized searches.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Last degree printed by `hilbert`.
        #[arg(long, default_value_t = 6)]
        max_degree: i32,
    },
}

fn read_input(file: &PathBuf) -> std::io::Result<String> {
    if file.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(file)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Command::Run { file, seed, max_degree } = cli.command;
    let text = match read_input(&file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("lochom: cannot read {}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    let session = match parse_session(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("lochom: parse error at {e}");
            return ExitCode::from(2);
        }
    };
    let transcript = run_session(&session, &Config { seed, max_degree });
    print!("{}", transcript.text);
    ExitCode::from(transcript.exit_code() as u8)
}
