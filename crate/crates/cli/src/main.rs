mod args;
mod commands;
mod error;
mod plot;
mod report;
mod table;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Kmeans(a) => commands::kmeans(a),
        Command::Dbscan(a) => commands::dbscan(a),
        Command::Hier(a) => commands::hier(a),
        Command::Generate(a) => commands::generate(a),
        Command::Dna(a) => commands::dna(a),
        Command::Plot(a) => commands::plot(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
