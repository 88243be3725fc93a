//! Command-line front end: parameter sweeps and simulated estimation runs
//! with deterministic CSV/JSON output.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod cli;
mod commands;
mod config;
mod error;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use cli::{Cli, Command, Format};
use error::{CliError, CliResult};
use output::Table;

fn main() -> ExitCode {
    if let Err(err) = init_thread_pool() {
        eprintln!("error: {}", err.message());
        return ExitCode::from(err.exit_code());
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err)
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) =>
        {
            print!("{err}");
            return ExitCode::SUCCESS;
        }
        Err(err) => {
            eprint!("{err}");
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

/// DEPHASEPROBE_THREADS caps worker parallelism; 0 or unset means automatic.
fn init_thread_pool() -> CliResult<()> {
    let Ok(raw) = std::env::var("DEPHASEPROBE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().map_err(|_| {
        CliError::Config(format!(
            "DEPHASEPROBE_THREADS must be a non-negative integer, got {raw:?}"
        ))
    })?;
    if n > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Config(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn run(cli: &Cli) -> CliResult<()> {
    let table = match &cli.command {
        Command::Rate(args) => commands::rate(args)?,
        Command::Qfi(args) => commands::qfi(args)?,
        Command::Fisher(args) => commands::fisher(args)?,
        Command::Sweep(args) => commands::sweep(args)?,
        Command::Opt(args) => commands::opt(args)?,
        Command::Excess(args) => commands::excess(args)?,
        Command::Simulate(args) => commands::simulate(args)?,
    };
    emit(&table, cli).map_err(|e| CliError::Numerical(format!("writing output: {e}")))
}

fn emit(table: &Table, cli: &Cli) -> io::Result<()> {
    match &cli.out {
        Some(path) => {
            let mut writer = BufWriter::new(File::create(path)?);
            write_table(table, cli.format, &mut writer)?;
            writer.flush()
        }
        None => {
            let stdout = io::stdout();
            let mut writer = stdout.lock();
            write_table(table, cli.format, &mut writer)
        }
    }
}

fn write_table<W: Write>(table: &Table, format: Format, out: &mut W) -> io::Result<()> {
    match format {
        Format::Csv => table.write_csv(out),
        Format::Json => table.write_json(out),
    }
}
