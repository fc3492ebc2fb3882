use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use verify_cli::{emit_table, render, run_selected, ConfigError, Format, SuiteConfig, TableKind, TableParams};

#[derive(Parser)]
#[command(name = "ff", about = "Functor workbench over F₂: verification suites and tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite, or `all`.
    Check {
        suite: String,
        #[arg(long = "max-deg", default_value_t = 6)]
        max_deg: usize,
        #[arg(long = "max-dim", default_value_t = 5)]
        max_dim: usize,
        #[arg(long, env = "FF_SEED", default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Include the slow degree-six cases.
        #[arg(long)]
        extended: bool,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit a table for a functor or partition literal.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        /// Functor literal such as `Lam[2,1]`, or a partition `3,1` for branching and schur.
        #[arg(long)]
        functor: String,
        #[arg(long)]
        dim: usize,
        #[arg(long = "max-deg")]
        max_deg: Option<usize>,
        #[arg(long, env = "FF_SEED", default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Dimensions of a functor for k = 0..=upto.
    Dims {
        #[arg(long)]
        functor: String,
        #[arg(long)]
        upto: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), ConfigError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| ConfigError::Params(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| ConfigError::Params(e.to_string()))
        }
    }
}

fn table_text(kind: TableKind, params: &TableParams, format: Format) -> Result<String, ConfigError> {
    let t = emit_table(kind, params)?;
    Ok(match format {
        Format::Json => t.to_json(),
        Format::Tsv => t.to_tsv(),
    })
}

fn run(cli: Cli) -> Result<bool, ConfigError> {
    match cli.command {
        Command::Check { suite, max_deg, max_dim, seed, format, extended, output } => {
            let cfg = SuiteConfig { max_degree: max_deg, max_dim, rng_seed: seed, suites: vec![suite], output, format, extended };
            let reports = run_selected(&cfg)?;
            emit(&render(&reports, format), cfg.output.as_ref())?;
            for r in &reports {
                eprintln!("{:<8} {} ({} cases, {:.1?})", r.suite_id, if r.passed() { "pass" } else { "FAIL" }, r.cases_run, r.wall_time);
            }
            Ok(reports.iter().all(|r| r.passed()))
        }
        Command::Table { kind, functor, dim, max_deg, seed, format } => {
            let params = TableParams { literal: functor, k: dim, max_degree: max_deg, seed };
            emit(&table_text(kind, &params, format)?, None)?;
            Ok(true)
        }
        Command::Dims { functor, upto, format } => {
            let params = TableParams { literal: functor, k: upto, max_degree: None, seed: 1 };
            emit(&table_text(TableKind::Dims, &params, format)?, None)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
