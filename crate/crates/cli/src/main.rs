//! `mixed-eulerian`: compute, enumerate and verify mixed Eulerian numbers
//! from the command line.

mod commands;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mixed_eulerian::identities::Suite;
use mixed_eulerian::Family;

use commands::{CliError, Limits};

#[derive(Debug, Parser)]
#[command(
    name = "mixed-eulerian",
    version,
    about = "Mixed Eulerian numbers of types A and B"
)]
struct Cli {
    /// Raise (or lower) every size cap to this value. Large values can take
    /// a very long time.
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TypeArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

impl From<TypeArg> for Family {
    fn from(t: TypeArg) -> Family {
        match t {
            TypeArg::A => Family::A,
            TypeArg::B => Family::B,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recursion,
    Enumeration,
    Oracle,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute one mixed Eulerian number.
    Compute {
        #[arg(long = "type", value_enum, default_value = "A")]
        family: TypeArg,
        /// Composition, as `1,0,2` or `102`.
        #[arg(long = "c", value_name = "COMPOSITION")]
        composition: String,
        #[arg(long, value_enum, default_value = "recursion")]
        method: Method,
    },
    /// List the C-permutations of a division, one per line.
    Enumerate {
        #[arg(long = "type", value_enum, default_value = "A")]
        family: TypeArg,
        /// Division such as `1|-|2,3|4|5` (`-` is an empty block).
        #[arg(
            long,
            conflicts_with = "composition",
            required_unless_present = "composition"
        )]
        division: Option<String>,
        /// Composition; its canonical division on 1..n is used.
        #[arg(long = "c", value_name = "COMPOSITION")]
        composition: Option<String>,
        /// Stop with an error after this many permutations.
        #[arg(long, default_value_t = mixed_eulerian::engine::DEFAULT_ENUMERATION_LIMIT)]
        limit: usize,
        /// Show the chain of divisions behind each permutation.
        #[arg(long)]
        trace: bool,
    },
    /// Check the identity suites for every size up to n; prints a JSON report.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        /// Include per-check timings (makes the output run-dependent).
        #[arg(long)]
        timing: bool,
    },
    /// Every composition of n with its value, in lexicographic order.
    Table {
        #[arg(long = "type", value_enum, default_value = "A")]
        family: TypeArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the volume polynomial, or evaluate it exactly.
    Oracle {
        #[arg(long = "type", value_enum, default_value = "A")]
        family: TypeArg,
        #[arg(long)]
        n: usize,
        /// Comma-separated rationals such as `1,1/2,3`.
        #[arg(long, value_name = "LAMBDA")]
        eval: Option<String>,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: mixed_eulerian::Error| e.to_string())
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let limits = Limits::new(cli.max_n);
    match cli.command {
        Command::Compute {
            family,
            composition,
            method,
        } => commands::compute(out, &limits, family.into(), &composition, method),
        Command::Enumerate {
            family,
            division,
            composition,
            limit,
            trace,
        } => commands::enumerate(
            out,
            &limits,
            family.into(),
            division.as_deref(),
            composition.as_deref(),
            limit,
            trace,
        ),
        Command::Verify { n, suite, timing } => commands::verify(out, &limits, n, suite, timing),
        Command::Table { family, n, format } => {
            commands::table(out, &limits, family.into(), n, format)
        }
        Command::Oracle { family, n, eval } => {
            commands::oracle(out, &limits, family.into(), n, eval.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(CliError::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            if let Some(message) = e.message() {
                eprintln!("mixed-eulerian: {message}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
