mod commands;
mod report;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use commands::{run, Command};
use report::Report;

#[derive(Debug, Parser)]
#[command(name = "lacunary", version, about = "Exact computations with lacunary polynomials over the rationals")]
struct Cli {
    /// Print readable text instead of JSON.
    #[arg(long, global = true)]
    plain: bool,
    #[command(subcommand)]
    command: Command,
}

fn emit(report: &Report, plain: bool) -> ExitCode {
    if plain {
        println!("{}", report.to_plain());
    } else {
        println!("{}", report.to_json());
    }
    ExitCode::from(report.status.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let plain = std::env::args().any(|a| a == "--plain");
            let message = e.render().to_string();
            eprint!("{message}");
            let first = message.lines().next().unwrap_or_default().trim_start_matches("error: ").to_string();
            return emit(&Report::error("", first), plain);
        }
    };
    let name = cli.command.name();
    let report = run(&cli.command, &mut std::io::stdin().lock()).unwrap_or_else(|e| Report::error(name, e.to_string()));
    emit(&report, cli.plain)
}
