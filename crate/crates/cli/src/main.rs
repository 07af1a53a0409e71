//! `symchar` — exact symmetric group characters from partition contents.
//!
//! Subcommands: `char`, `table`, `fmu`, `hecke`, `coeffs`, `verify`,
//! `bench`. All values are printed exactly, as decimal integers or `a/b`
//! rational strings; output for a fixed input is byte-identical across
//! runs.
//!
//! Exit codes: 0 success, 2 usage error, 3 verification failure.

mod bench;
mod render;
mod tables;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use symchar::charformula::{integer_char, normalized_char};
use symchar::partitions::Partition;

#[derive(Parser)]
#[command(name = "symchar", version, about = "Exact symmetric group characters from partition contents")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one character value χ^λ_μ (or χ̂^λ_μ with --normalized)
    Char {
        /// Representation label, e.g. "4,2,1" (empty string for the empty partition)
        #[arg(long)]
        lambda: String,
        /// Cycle type, e.g. "3,2,1,1"
        #[arg(long)]
        mu: String,
        /// Print the normalized character χ^λ_μ / dim λ
        #[arg(long)]
        normalized: bool,
    },
    /// Emit the full character table of S_n
    Table {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Verify row orthogonality of the emitted table and append the result
        #[arg(long)]
        check_orthogonality: bool,
        /// Write to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// Override the safety cap on n
        #[arg(long)]
        allow_large: bool,
    },
    /// Emit class polynomials f_ρ for every profile with |ρ| - l(ρ) ≤ max-k
    Fmu {
        #[arg(long)]
        max_k: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Reuse previously computed polynomials from this directory
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[arg(long)]
        allow_large: bool,
    },
    /// Hecke algebra character values as polynomials in (q1, q2)
    Hecke {
        /// Representation label (requires --mu)
        #[arg(long)]
        lambda: Option<String>,
        /// Element label (requires --lambda)
        #[arg(long)]
        mu: Option<String>,
        /// Emit the full table at weight n instead of a single value
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        allow_large: bool,
    },
    /// Generalized binomial tables ⟨n,p,k⟩ and G_n coefficients
    Coeffs {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        allow_large: bool,
    },
    /// Run a named verification suite and report pass/fail counts
    Verify {
        /// oracle-equivalence, series, coeffs, jm, hecke, or all
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 6)]
        n_max: u32,
    },
    /// Time the closed-formula path against the recursion, as JSON
    Bench {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        repeat: usize,
        /// Seed for the choice of random λ
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long)]
        allow_large: bool,
    },
}

const N_CAP: u32 = 14;
const K_CAP: u32 = 12;

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_VERIFY_FAILED: u8 = 3;

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn check_cap(value: u32, cap: u32, what: &str, allow_large: bool) -> Result<(), String> {
    if value > cap && !allow_large {
        Err(format!(
            "{what} = {value} exceeds the safety cap {cap}; pass --allow-large to run anyway"
        ))
    } else {
        Ok(())
    }
}

fn parse_partition(s: &str, what: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| format!("{what}: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Char { lambda, mu, normalized } => cmd_char(&lambda, &mu, normalized),
        Command::Table { n, format, check_orthogonality, output, allow_large } => {
            if let Err(msg) = check_cap(n, N_CAP, "n", allow_large) {
                return usage_error(&msg);
            }
            emit(tables::character_table(n, format, check_orthogonality), output)
        }
        Command::Fmu { max_k, format, output, cache_dir, allow_large } => {
            if let Err(msg) = check_cap(max_k, K_CAP, "max-k", allow_large) {
                return usage_error(&msg);
            }
            emit(tables::fmu_table(max_k, format, cache_dir.as_deref()), output)
        }
        Command::Hecke { lambda, mu, n, format, output, allow_large } => {
            let doc = match (lambda, mu, n) {
                (Some(l), Some(m), None) => {
                    let la = match parse_partition(&l, "--lambda") {
                        Ok(p) => p,
                        Err(msg) => return usage_error(&msg),
                    };
                    let mu = match parse_partition(&m, "--mu") {
                        Ok(p) => p,
                        Err(msg) => return usage_error(&msg),
                    };
                    match tables::hecke_single(&la, &mu, format) {
                        Ok(doc) => doc,
                        Err(msg) => return usage_error(&msg),
                    }
                }
                (None, None, Some(n)) => {
                    if let Err(msg) = check_cap(n, N_CAP, "n", allow_large) {
                        return usage_error(&msg);
                    }
                    tables::hecke_table(n, format)
                }
                _ => {
                    return usage_error(
                        "hecke needs either --lambda and --mu together, or --n for a table",
                    )
                }
            };
            emit(doc, output)
        }
        Command::Coeffs { n, format, output, allow_large } => {
            if let Err(msg) = check_cap(n, N_CAP, "n", allow_large) {
                return usage_error(&msg);
            }
            emit(tables::coeffs_table(n, format), output)
        }
        Command::Verify { suite, n_max } => cmd_verify(&suite, n_max),
        Command::Bench { n, repeat, seed, allow_large } => {
            if let Err(msg) = check_cap(n, N_CAP, "n", allow_large) {
                return usage_error(&msg);
            }
            if repeat == 0 {
                return usage_error("--repeat must be at least 1");
            }
            println!("{}", bench::run(n, repeat, seed));
            ExitCode::SUCCESS
        }
    }
}

fn cmd_char(lambda: &str, mu: &str, normalized: bool) -> ExitCode {
    let la = match parse_partition(lambda, "--lambda") {
        Ok(p) => p,
        Err(msg) => return usage_error(&msg),
    };
    let mu = match parse_partition(mu, "--mu") {
        Ok(p) => p,
        Err(msg) => return usage_error(&msg),
    };
    if normalized {
        match normalized_char(&la, &mu) {
            Ok(v) => println!("{}", symchar::algebra::scalar_string(&v)),
            Err(e) => return usage_error(&e.to_string()),
        }
    } else {
        match integer_char(&la, &mu) {
            Ok(v) => println!("{v}"),
            Err(e) => return usage_error(&e.to_string()),
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(suite: &str, n_max: u32) -> ExitCode {
    let names: Vec<&str> = if suite == "all" {
        verify::SUITES.to_vec()
    } else if verify::SUITES.contains(&suite) {
        vec![suite]
    } else {
        return usage_error(&format!(
            "unknown suite '{suite}'; expected one of {} or all",
            verify::SUITES.join(", ")
        ));
    };
    let mut any_failed = false;
    for name in names {
        let report = verify::run_suite(name, n_max);
        println!(
            "suite {:<18} {:>6} passed {:>4} failed  -> {}",
            report.name,
            report.passed,
            report.failed,
            if report.failed == 0 { "ok" } else { "FAILED" }
        );
        for line in &report.failures {
            println!("    {line}");
        }
        any_failed |= report.failed > 0;
    }
    if any_failed {
        ExitCode::from(EXIT_VERIFY_FAILED)
    } else {
        ExitCode::SUCCESS
    }
}

fn emit(doc: String, output: Option<PathBuf>) -> ExitCode {
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, doc) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::SUCCESS
        }
        None => {
            print!("{doc}");
            ExitCode::SUCCESS
        }
    }
}
