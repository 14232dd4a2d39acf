use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use reeskit::dsl::{Execution, Session};

#[derive(Parser)]
#[command(name = "reeskit", version, about = "Rees algebras, torsionless quotients and total blow-ups")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a script file
    Run {
        file: PathBuf,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Replay the built-in reference computations
    Verify {
        #[arg(long)]
        json: bool,
    },
    /// Read statements interactively; each is run once its `;` is entered
    Repl,
}

fn report(ex: &Execution, json: bool) -> ExitCode {
    if json {
        println!("{}", serde_json::to_string_pretty(&ex.to_json()).expect("serializable"));
    } else {
        print!("{}", ex.to_text());
        if let Some(e) = &ex.error {
            eprintln!("error: {e}");
        }
    }
    ExitCode::from(ex.exit_code() as u8)
}

fn repl() -> ExitCode {
    let mut session = Session::new();
    let stdin = io::stdin();
    let mut pending = String::new();
    let mut status = 0;
    print!("reeskit> ");
    io::stdout().flush().ok();
    for line in stdin.lock().lines() {
        let Ok(line) = line else { break };
        pending.push_str(&line);
        pending.push('\n');
        if line.trim_end().ends_with(';') {
            let ex = session.run_source(&pending);
            print!("{}", ex.to_text());
            if let Some(e) = &ex.error {
                eprintln!("error: {e}");
            }
            status = ex.exit_code();
            pending.clear();
        }
        print!("{}", if pending.is_empty() { "reeskit> " } else { "     ... " });
        io::stdout().flush().ok();
    }
    println!();
    ExitCode::from(status as u8)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Cmd::Run { file, json } => match std::fs::read_to_string(&file) {
            Ok(src) => report(&reeskit::dsl::run_source(&src), json),
            Err(e) => {
                eprintln!("error: {}: {e}", file.display());
                ExitCode::from(1)
            }
        },
        Cmd::Verify { json } => report(&reeskit::dsl::run_source("verify;"), json),
        Cmd::Repl => repl(),
    }
}
