//! Command line front end: compute any table, check any identity, and emit
//! machine-readable reports.
//!
//! Exit codes: 0 when everything passed, 1 when an identity check failed,
//! 2 for usage or configuration errors.  `SOLOMON_THREADS` caps the worker
//! count.  Output is deterministic; `--no-timing` removes the only field
//! that varies between runs.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use solomon::{identities, render_table, run_many, TableKind, VerificationReport};

#[derive(Parser)]
#[command(name = "solomon", version, about = "Exact descent-algebra tables and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a table and write it as JSON or CSV.
    Compute {
        /// Table kind: a, b, c, d, dB, kostka, chi, psi, g, gB, m2 or m3.
        kind: String,
        /// Size parameter of the table.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Omit zero cells from JSON grids.
        #[arg(long)]
        nonzero_only: bool,
    },
    /// Check one identity at one size and print its report.
    Verify {
        /// Identity id, e.g. eq2-carter; see the README for the full list.
        id: String,
        /// Size to check.
        #[arg(long)]
        n: usize,
        /// Suppress the timing field so output is byte-stable.
        #[arg(long)]
        no_timing: bool,
    },
    /// Check a batch of identities and print an aggregate report.
    ///
    /// The config file is a JSON object mapping identity ids to the largest
    /// size to check; each identity runs at every size from 1 up to its
    /// entry.  Without a config, every registered identity runs up to its
    /// default size.
    VerifyAll {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Suppress the timing fields so output is byte-stable.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Serialize)]
struct ConfigError {
    identity: String,
    requested: usize,
    message: String,
}

#[derive(Serialize)]
struct SuiteReport {
    schema: &'static str,
    status: &'static str,
    reports: Vec<VerificationReport>,
    errors: Vec<ConfigError>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(message) = cap_threads() {
        eprintln!("error: {message}");
        return ExitCode::from(2);
    }
    match cli.command {
        Command::Compute {
            kind,
            n,
            format,
            out,
            nonzero_only,
        } => compute(&kind, n, format, out.as_deref(), nonzero_only),
        Command::Verify { id, n, no_timing } => verify(&id, n, no_timing),
        Command::VerifyAll { config, no_timing } => verify_all(config.as_deref(), no_timing),
    }
}

fn cap_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("SOLOMON_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .parse()
        .ok()
        .filter(|&t| t >= 1)
        .ok_or_else(|| format!("SOLOMON_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn compute(
    kind: &str,
    n: usize,
    format: Format,
    out: Option<&std::path::Path>,
    nonzero_only: bool,
) -> ExitCode {
    let Some(kind) = TableKind::parse(kind) else {
        let names: Vec<&str> = TableKind::ALL.iter().map(|k| k.name()).collect();
        eprintln!("error: unknown table kind {kind:?}; expected one of {}", names.join(", "));
        return ExitCode::from(2);
    };
    let table = match render_table(kind, n, nonzero_only) {
        Ok(table) => table,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let body = match format {
        Format::Json => table.json,
        Format::Csv => table.csv,
    };
    write_out(out, &body)
}

fn write_out(out: Option<&std::path::Path>, body: &str) -> ExitCode {
    match out {
        None => {
            print!("{body}");
            ExitCode::SUCCESS
        }
        Some(path) => match std::fs::write(path, body) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                ExitCode::from(2)
            }
        },
    }
}

fn verify(id: &str, n: usize, no_timing: bool) -> ExitCode {
    match solomon::run_identity(id, n) {
        Ok(mut report) => {
            if no_timing {
                report.millis = None;
            }
            let passed = report.status == "pass";
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn verify_all(config: Option<&std::path::Path>, no_timing: bool) -> ExitCode {
    let plan: BTreeMap<String, usize> = match config {
        None => identities()
            .iter()
            .map(|spec| (spec.id.to_string(), spec.default_max))
            .collect(),
        Some(path) => {
            let raw = match std::fs::read_to_string(path) {
                Ok(raw) => raw,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            };
            match serde_json::from_str(&raw) {
                Ok(plan) => plan,
                Err(e) => {
                    eprintln!("error: config {} is not an id-to-size map: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
        }
    };

    let mut errors = Vec::new();
    let mut requests = Vec::new();
    for (id, &max) in &plan {
        let spec = identities().iter().find(|spec| spec.id == *id);
        let message = match spec {
            None => Some(format!("unknown identity id {id:?}")),
            Some(spec) if max < 1 || max > spec.hard_max => Some(format!(
                "{id} supports sizes 1 to {}, got {max}",
                spec.hard_max
            )),
            Some(_) => None,
        };
        match message {
            Some(message) => errors.push(ConfigError {
                identity: id.clone(),
                requested: max,
                message,
            }),
            None => requests.extend((1..=max).map(|n| (id.clone(), n))),
        }
    }

    let mut reports = Vec::new();
    for outcome in run_many(&requests) {
        let mut report = outcome.expect("requests are pre-validated against the registry");
        if no_timing {
            report.millis = None;
        }
        reports.push(report);
    }

    let status = if reports.iter().any(|r| r.status != "pass") {
        "fail"
    } else if !errors.is_empty() {
        "error"
    } else {
        "pass"
    };
    let suite = SuiteReport {
        schema: "verify-suite/1",
        status,
        reports,
        errors,
    };
    println!("{}", serde_json::to_string_pretty(&suite).unwrap());
    match status {
        "pass" => ExitCode::SUCCESS,
        "fail" => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}
