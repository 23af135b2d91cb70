mod args;
mod cmd;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format, K0Action, MeasureAction};
use report::{CliError, Report};

fn dispatch(cli: &Cli) -> Result<Box<dyn Report>, CliError> {
    let threads = cli.common.threads;
    Ok(match &cli.command {
        Command::Potential(a) => Box::new(cmd::potential::run(a)?),
        Command::Critical(a) => Box::new(cmd::critical::run(a, threads)?),
        Command::K0 { action: K0Action::Verify { genus } } => Box::new(cmd::k0::verify(genus)?),
        Command::K0 { action: K0Action::Class { genus } } => Box::new(cmd::k0::class(genus)?),
        Command::Measure { action } => match action {
            MeasureAction::Betti { genus } => Box::new(cmd::measure::run_betti(genus)?),
            MeasureAction::Hodge { genus } => Box::new(cmd::measure::run_hodge(genus)?),
            MeasureAction::Dg { genus } => Box::new(cmd::measure::run_dg(genus)?),
            MeasureAction::Count { curve } => Box::new(cmd::measure::run_count(curve)?),
        },
        Command::Zeta(z) => match (&z.genus, &z.curve) {
            (_, Some(path)) => Box::new(cmd::measure::run_zeta_curve(path)?),
            (Some(genus), None) => Box::new(cmd::measure::run_zeta_genus(genus)?),
            (None, None) => return Err(CliError::usage("pass --genus or --curve")),
        },
    })
}

fn configure_threads(threads: Option<usize>) -> Result<(), CliError> {
    match threads {
        Some(0) => Err(CliError::usage("--threads must be positive")),
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(CliError::usage),
        None => Ok(()),
    }
}

fn emit(cli: &Cli, report: &dyn Report) -> Result<(), CliError> {
    let body = match cli.common.format {
        Format::Json => report.json(),
        Format::Csv => report.csv(),
        Format::Text => report.text(),
    };
    match &cli.common.out {
        Some(path) => std::fs::write(path, body).map_err(|e| CliError::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads(cli.common.threads).and_then(|()| {
        let report = dispatch(&cli)?;
        emit(&cli, report.as_ref())?;
        if report.passed() {
            Ok(())
        } else {
            Err(CliError::Checkpoint("see report".into()))
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
